/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials with exact rational coefficients.
 *
 * Terms are keyed by exponent vectors in graded-lex order so that iteration
 * (and hence serialization) is deterministic. Zero coefficients are never
 * stored.
 */
#pragma once

#include "modcount/rational.hpp"

#include <map>
#include <vector>

namespace modcount {

using Exponents = std::vector<int>;

struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        long long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

class Polynomial {
    int vars_;
    std::map<Exponents, Rational, GrlexLess> terms_;

public:
    explicit Polynomial(int vars = 0) : vars_(vars) {}

    static Polynomial constant(int vars, const Rational& c) {
        Polynomial p(vars);
        p.add_term(Exponents(vars, 0), c);
        return p;
    }

    static Polynomial monomial(int vars, const Exponents& exp, const Rational& c) {
        Polynomial p(vars);
        p.add_term(exp, c);
        return p;
    }

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational, GrlexLess>& terms() const { return terms_; }

    void add_term(const Exponents& exp, const Rational& c) {
        if (static_cast<int>(exp.size()) != vars_)
            throw std::invalid_argument("Polynomial: exponent vector length mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coefficient(const Exponents& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [exp, c] : terms_) {
            int t = 0;
            for (int e : exp) t += e;
            if (t > d) d = t;
        }
        return d;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [exp, c] : o.terms_) add_term(exp, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [exp, c] : o.terms_) add_term(exp, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.vars_);
                for (int i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    Polynomial scaled(const Rational& c) const {
        Polynomial r(vars_);
        if (c.is_zero()) return r;
        for (const auto& [exp, coef] : terms_) r.terms_.emplace(exp, coef * c);
        return r;
    }

    Polynomial homogeneous_part(int degree) const {
        Polynomial r(vars_);
        for (const auto& [exp, c] : terms_) {
            int t = 0;
            for (int e : exp) t += e;
            if (t == degree) r.terms_.emplace(exp, c);
        }
        return r;
    }

    // Relabel variables: exponent of old variable i goes to position perm[i].
    Polynomial permuted(const std::vector<int>& perm) const {
        Polynomial r(vars_);
        for (const auto& [exp, c] : terms_) {
            Exponents e(vars_, 0);
            for (int i = 0; i < vars_; ++i) e[perm[i]] = exp[i];
            r.add_term(e, c);
        }
        return r;
    }

    Rational evaluate(const std::vector<BigInt>& point) const {
        if (static_cast<int>(point.size()) != vars_)
            throw std::invalid_argument("Polynomial: evaluation point length mismatch");
        Rational acc(0);
        for (const auto& [exp, c] : terms_) {
            BigInt m = 1;
            for (int i = 0; i < vars_; ++i)
                for (int k = 0; k < exp[i]; ++k) m *= point[i];
            acc += c * Rational(m);
        }
        return acc;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != vars_)
            throw std::invalid_argument("Polynomial: evaluation point length mismatch");
        Rational acc(0);
        for (const auto& [exp, c] : terms_) {
            Rational m(1);
            for (int i = 0; i < vars_; ++i) m *= point[i].pow(exp[i]);
            acc += c * m;
        }
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string to_string(const std::string& var_stem = "b") const;
};

inline std::string Polynomial::to_string(const std::string& var_stem) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exp, c] = *it;
        if (!out.empty()) out += c.is_negative() ? " - " : " + ";
        else if (c.is_negative()) out += "-";
        std::string mono;
        for (size_t i = 0; i < exp.size(); ++i) {
            if (exp[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_stem + std::to_string(i + 1);
            if (exp[i] > 1) mono += "^" + std::to_string(exp[i]);
        }
        Rational a = c.abs();
        if (mono.empty()) out += a.to_string();
        else if (a == Rational(1)) out += mono;
        else out += a.to_string() + "*" + mono;
    }
    return out;
}

} // namespace modcount
