/**
 * @file series.hpp
 * @brief Multivariate power series with rational coefficients, truncated at a
 *        total-order cutoff.
 *
 * Arithmetic is closed under +, -, * and division by units (nonzero constant
 * term). Coefficients beyond the cutoff are never stored.
 */
#pragma once

#include "modcount/polynomial.hpp"

#include <functional>
#include <map>

namespace modcount {

class TruncatedSeries {
    int vars_;
    int order_; // total-degree cutoff M
    std::map<Exponents, Rational, GrlexLess> coeffs_;

public:
    TruncatedSeries(int vars, int order) : vars_(vars), order_(order) {
        if (vars < 1 || order < 0) throw std::invalid_argument("TruncatedSeries: bad shape");
    }

    static TruncatedSeries constant(int vars, int order, const Rational& c) {
        TruncatedSeries s(vars, order);
        s.set(Exponents(vars, 0), c);
        return s;
    }

    int vars() const { return vars_; }
    int order() const { return order_; }
    const std::map<Exponents, Rational, GrlexLess>& coeffs() const { return coeffs_; }

    static int degree_of(const Exponents& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }

    void set(const Exponents& exp, const Rational& c) {
        if (static_cast<int>(exp.size()) != vars_)
            throw std::invalid_argument("TruncatedSeries: exponent length mismatch");
        if (degree_of(exp) > order_) return;
        if (c.is_zero()) coeffs_.erase(exp);
        else coeffs_[exp] = c;
    }

    void add(const Exponents& exp, const Rational& c) {
        if (static_cast<int>(exp.size()) != vars_)
            throw std::invalid_argument("TruncatedSeries: exponent length mismatch");
        if (degree_of(exp) > order_ || c.is_zero()) return;
        auto it = coeffs_.find(exp);
        if (it == coeffs_.end()) coeffs_.emplace(exp, c);
        else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    Rational coefficient(const Exponents& exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Exponents(vars_, 0)); }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    TruncatedSeries scaled(const Rational& c) const;

    // Exact division; divisor must have a nonzero constant term.
    TruncatedSeries divided_by(const TruncatedSeries& divisor) const;

    TruncatedSeries pow(int e) const; // e >= 0

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.vars_ == b.vars_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }
};

// Visit every exponent vector of total degree <= order, in nondecreasing
// total degree.
void for_each_exponent(int vars, int order, const std::function<void(const Exponents&)>& fn);

} // namespace modcount
