/**
 * @file ratexpr.hpp
 * @brief Expression trees over variables z_1..z_n with rational constants and
 *        operators +, -, *, /, integer power.
 *
 * An expression can be expanded into a TruncatedSeries (every divisor must be
 * a unit after normalization) or evaluated exactly at a rational point.
 */
#pragma once

#include "modcount/series.hpp"

#include <memory>

namespace modcount {

class RationalExpr {
public:
    enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Pow };

    Kind kind;
    Rational value;   // Constant
    int var = -1;     // Variable (0-based)
    int exponent = 0; // Pow (may be negative)
    std::shared_ptr<const RationalExpr> lhs, rhs;

    static RationalExpr constant(const Rational& c) {
        RationalExpr e;
        e.kind = Kind::Constant;
        e.value = c;
        return e;
    }
    static RationalExpr variable(int index) {
        RationalExpr e;
        e.kind = Kind::Variable;
        e.var = index;
        return e;
    }
    static RationalExpr binary(Kind k, RationalExpr a, RationalExpr b) {
        RationalExpr e;
        e.kind = k;
        e.lhs = std::make_shared<RationalExpr>(std::move(a));
        e.rhs = std::make_shared<RationalExpr>(std::move(b));
        return e;
    }
    static RationalExpr pow(RationalExpr base, int e) {
        RationalExpr r;
        r.kind = Kind::Pow;
        r.exponent = e;
        r.lhs = std::make_shared<RationalExpr>(std::move(base));
        return r;
    }

    friend RationalExpr operator+(RationalExpr a, RationalExpr b) {
        return binary(Kind::Add, std::move(a), std::move(b));
    }
    friend RationalExpr operator-(RationalExpr a, RationalExpr b) {
        return binary(Kind::Sub, std::move(a), std::move(b));
    }
    friend RationalExpr operator*(RationalExpr a, RationalExpr b) {
        return binary(Kind::Mul, std::move(a), std::move(b));
    }
    friend RationalExpr operator/(RationalExpr a, RationalExpr b) {
        return binary(Kind::Div, std::move(a), std::move(b));
    }
};

// Exact expansion to total order `order` in `vars` variables.
// Throws std::domain_error if a divisor has zero constant term.
TruncatedSeries series_expand(const RationalExpr& expr, int vars, int order);

// Exact evaluation at a rational point. Throws on division by zero.
Rational evaluate(const RationalExpr& expr, const std::vector<Rational>& point);

} // namespace modcount
