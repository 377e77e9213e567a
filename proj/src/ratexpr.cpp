#include "modcount/ratexpr.hpp"

namespace modcount {

TruncatedSeries series_expand(const RationalExpr& expr, int vars, int order) {
    switch (expr.kind) {
    case RationalExpr::Kind::Constant:
        return TruncatedSeries::constant(vars, order, expr.value);
    case RationalExpr::Kind::Variable: {
        if (expr.var < 0 || expr.var >= vars)
            throw std::invalid_argument("series_expand: variable index out of range");
        TruncatedSeries s(vars, order);
        Exponents e(vars, 0);
        e[expr.var] = 1;
        s.set(e, Rational(1));
        return s;
    }
    case RationalExpr::Kind::Add:
        return series_expand(*expr.lhs, vars, order) + series_expand(*expr.rhs, vars, order);
    case RationalExpr::Kind::Sub:
        return series_expand(*expr.lhs, vars, order) - series_expand(*expr.rhs, vars, order);
    case RationalExpr::Kind::Mul:
        return series_expand(*expr.lhs, vars, order) * series_expand(*expr.rhs, vars, order);
    case RationalExpr::Kind::Div:
        return series_expand(*expr.lhs, vars, order)
            .divided_by(series_expand(*expr.rhs, vars, order));
    case RationalExpr::Kind::Pow: {
        TruncatedSeries base = series_expand(*expr.lhs, vars, order);
        if (expr.exponent >= 0) return base.pow(expr.exponent);
        TruncatedSeries one = TruncatedSeries::constant(vars, order, Rational(1));
        return one.divided_by(base).pow(-expr.exponent);
    }
    }
    throw std::logic_error("series_expand: unreachable");
}

Rational evaluate(const RationalExpr& expr, const std::vector<Rational>& point) {
    switch (expr.kind) {
    case RationalExpr::Kind::Constant:
        return expr.value;
    case RationalExpr::Kind::Variable:
        if (expr.var < 0 || expr.var >= static_cast<int>(point.size()))
            throw std::invalid_argument("evaluate: variable index out of range");
        return point[expr.var];
    case RationalExpr::Kind::Add:
        return evaluate(*expr.lhs, point) + evaluate(*expr.rhs, point);
    case RationalExpr::Kind::Sub:
        return evaluate(*expr.lhs, point) - evaluate(*expr.rhs, point);
    case RationalExpr::Kind::Mul:
        return evaluate(*expr.lhs, point) * evaluate(*expr.rhs, point);
    case RationalExpr::Kind::Div:
        return evaluate(*expr.lhs, point) / evaluate(*expr.rhs, point);
    case RationalExpr::Kind::Pow:
        return evaluate(*expr.lhs, point).pow(expr.exponent);
    }
    throw std::logic_error("evaluate: unreachable");
}

} // namespace modcount
