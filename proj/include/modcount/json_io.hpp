/**
 * @file json_io.hpp
 * @brief JSON schemas for polynomials, quasi-polynomials, catalogs, and the
 *        omega-series diff artifact. Rationals serialize as "p/q" strings
 *        (plain "p" for integers); keys and monomials are emitted in sorted
 *        order so identical values dump to identical bytes.
 */
#pragma once

#include "modcount/fatgraph.hpp"
#include "modcount/laplace.hpp"
#include "modcount/quasipoly.hpp"

#include <json.hpp>

#include <string>

namespace modcount {

nlohmann::json to_json(const Rational& value);
nlohmann::json to_json(const Polynomial& poly);
nlohmann::json to_json(const QuasiPolynomial& qp);
nlohmann::json to_json(const FatgraphCatalog& catalog);
nlohmann::json to_json(const SeriesDiff& diff);

Polynomial polynomial_from_json(const nlohmann::json& j);
QuasiPolynomial quasipolynomial_from_json(const nlohmann::json& j);

void save_quasipolynomial(const QuasiPolynomial& qp, const std::string& path);
QuasiPolynomial load_quasipolynomial(const std::string& path);

} // namespace modcount
