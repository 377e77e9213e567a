#include "modcount/json_io.hpp"

#include <fstream>

namespace modcount {

nlohmann::json to_json(const Rational& value) { return value.to_string(); }

nlohmann::json to_json(const Polynomial& poly) {
    nlohmann::json monomials = nlohmann::json::array();
    for (const auto& [exp, coef] : poly.terms())
        monomials.push_back({{"exp", exp}, {"coef", coef.to_string()}});
    return {{"vars", poly.vars()}, {"monomials", monomials}};
}

nlohmann::json to_json(const QuasiPolynomial& qp) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& [parity, poly] : qp.classes())
        classes.push_back({{"parity", parity}, {"poly", to_json(poly)}});
    return {{"vars", qp.vars()}, {"classes", classes}};
}

nlohmann::json to_json(const FatgraphCatalog& catalog) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& entry : catalog.entries)
        entries.push_back({{"fatgraph", to_text(entry.graph)}, {"aut_order", entry.aut_order}});
    return {{"g", catalog.genus},
            {"n", catalog.boundaries},
            {"unlabeled_classes", catalog.unlabeled_classes},
            {"entries", entries}};
}

nlohmann::json to_json(const SeriesDiff& diff) {
    nlohmann::json j;
    j["matched"] = diff.matched;
    j["order"] = diff.order;
    if (diff.matched) {
        j["first_mismatch"] = nullptr;
    } else {
        const SeriesMismatch& m = diff.mismatches.front();
        j["first_mismatch"] = {
            {"exp", m.exp}, {"lhs", m.direct.to_string()}, {"rhs", m.closed_form.to_string()}};
    }
    return j;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    Polynomial poly(j.at("vars").get<int>());
    for (const auto& m : j.at("monomials")) {
        Exponents exp = m.at("exp").get<Exponents>();
        poly.add_term(exp, Rational::parse(m.at("coef").get<std::string>()));
    }
    return poly;
}

QuasiPolynomial quasipolynomial_from_json(const nlohmann::json& j) {
    QuasiPolynomial qp(j.at("vars").get<int>());
    for (const auto& c : j.at("classes"))
        qp.set_class(c.at("parity").get<ParityClass>(), polynomial_from_json(c.at("poly")));
    return qp;
}

void save_quasipolynomial(const QuasiPolynomial& qp, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_json(qp).dump(2) << "\n";
}

QuasiPolynomial load_quasipolynomial(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    nlohmann::json j;
    in >> j;
    return quasipolynomial_from_json(j);
}

} // namespace modcount
