#include "modcount/series.hpp"

namespace modcount {

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.vars_ != vars_ || o.order_ != order_)
        throw std::invalid_argument("TruncatedSeries: shape mismatch");
    for (const auto& [exp, c] : o.coeffs_) add(exp, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (o.vars_ != vars_ || o.order_ != order_)
        throw std::invalid_argument("TruncatedSeries: shape mismatch");
    for (const auto& [exp, c] : o.coeffs_) add(exp, -c);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.vars_ != b.vars_ || a.order_ != b.order_)
        throw std::invalid_argument("TruncatedSeries: shape mismatch");
    TruncatedSeries r(a.vars_, a.order_);
    for (const auto& [ea, ca] : a.coeffs_) {
        int da = TruncatedSeries::degree_of(ea);
        for (const auto& [eb, cb] : b.coeffs_) {
            if (da + TruncatedSeries::degree_of(eb) > a.order_) continue;
            Exponents e(a.vars_);
            for (int i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
            r.add(e, ca * cb);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries r(vars_, order_);
    if (c.is_zero()) return r;
    for (const auto& [exp, coef] : coeffs_) r.coeffs_.emplace(exp, coef * c);
    return r;
}

TruncatedSeries TruncatedSeries::divided_by(const TruncatedSeries& divisor) const {
    if (divisor.vars_ != vars_ || divisor.order_ != order_)
        throw std::invalid_argument("TruncatedSeries: shape mismatch");
    Rational g0 = divisor.constant_term();
    if (g0.is_zero())
        throw std::domain_error("TruncatedSeries: divisor has zero constant term");

    // Graded long division: the coefficient of each exponent is determined by
    // strictly smaller exponents, walked in grlex order.
    TruncatedSeries q(vars_, order_);
    for_each_exponent(vars_, order_, [&](const Exponents& exp) {
        Rational acc = coefficient(exp);
        for (const auto& [eg, cg] : divisor.coeffs_) {
            if (degree_of(eg) == 0) continue;
            Exponents rest(vars_);
            bool ok = true;
            for (int i = 0; i < vars_; ++i) {
                rest[i] = exp[i] - eg[i];
                if (rest[i] < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            acc -= cg * q.coefficient(rest);
        }
        q.set(exp, acc / g0);
    });
    return q;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
    if (e < 0) throw std::invalid_argument("TruncatedSeries::pow: negative exponent");
    TruncatedSeries r = constant(vars_, order_, Rational(1));
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

void for_each_exponent(int vars, int order, const std::function<void(const Exponents&)>& fn) {
    Exponents e(vars, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == vars - 1) {
            e[pos] = remaining;
            fn(e);
            e[pos] = 0;
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            e[pos] = k;
            self(self, pos + 1, remaining - k);
        }
        e[pos] = 0;
    };
    for (int d = 0; d <= order; ++d) rec(rec, 0, d);
}

} // namespace modcount
