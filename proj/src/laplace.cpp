#include "modcount/laplace.hpp"

#include "modcount/moduli.hpp"

#include <algorithm>

namespace modcount {

TruncatedSeries discrete_omega_series(int g, int n, int order) {
    if (2 * g - 2 + n <= 0) throw std::invalid_argument("discrete_omega_series: unstable type");
    TruncatedSeries series(n, order);
    for_each_exponent(n, order, [&](const Exponents& exp) {
        std::vector<long long> b(n);
        BigInt prod = 1;
        for (int i = 0; i < n; ++i) {
            b[i] = exp[i] + 1;
            prod *= b[i];
        }
        Rational value = lattice_count_recursive(g, n, b);
        if (!value.is_zero()) series.set(exp, Rational(prod) * value);
    });
    return series;
}

namespace {

RationalExpr zvar(int i) { return RationalExpr::variable(i); }
RationalExpr rc(const Rational& r) { return RationalExpr::constant(r); }
RationalExpr rc(long long num, long long den = 1) { return rc(Rational(num, den)); }

RationalExpr one_minus_z_product(int n, int sign, int power) {
    // prod_i (1 + sign*z_i)^power
    RationalExpr prod = rc(1);
    for (int i = 0; i < n; ++i)
        prod = prod * RationalExpr::pow(rc(1) + rc(sign) * zvar(i), power);
    return prod;
}

} // namespace

RationalExpr closed_omega_expr(OmegaForm form) {
    switch (form) {
    case OmegaForm::W03:
        return rc(1, 2) / one_minus_z_product(3, -1, 2) - rc(1, 2) / one_minus_z_product(3, 1, 2);
    case OmegaForm::W11:
        return RationalExpr::pow(zvar(0), 3) /
               RationalExpr::pow(rc(1) - zvar(0) * zvar(0), 4);
    case OmegaForm::W04: {
        auto hump = [&](int sign) {
            RationalExpr sum = rc(0);
            for (int i = 0; i < 4; ++i)
                sum = sum + zvar(i) / RationalExpr::pow(rc(1) + rc(sign) * zvar(i), 2);
            return rc(3, 4) * sum / one_minus_z_product(4, sign, 2);
        };
        RationalExpr pair_sum = rc(0);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                int k = -1, l = -1;
                for (int t = 0; t < 4; ++t)
                    if (t != i && t != j) (k < 0 ? k : l) = t;
                pair_sum = pair_sum + zvar(i) * zvar(j) * (rc(1) + zvar(k) * zvar(k)) *
                                          (rc(1) + zvar(l) * zvar(l));
            }
        RationalExpr square_prod = rc(1);
        for (int i = 0; i < 4; ++i)
            square_prod = square_prod * RationalExpr::pow(rc(1) - zvar(i) * zvar(i), 2);
        return hump(-1) - hump(1) + pair_sum / (rc(2) * square_prod);
    }
    }
    throw std::logic_error("closed_omega_expr: unreachable");
}

TruncatedSeries closed_omega_series(OmegaForm form, int order) {
    int vars = form == OmegaForm::W11 ? 1 : (form == OmegaForm::W03 ? 3 : 4);
    return series_expand(closed_omega_expr(form), vars, order);
}

AiryForm printed_airy_form(int g, int n) {
    AiryForm form;
    if (g == 0 && n == 3) {
        form[{-2, -2, -2}] = Rational(-1, 2);
    } else if (g == 1 && n == 1) {
        form[{-4}] = Rational(-1, 16);
    } else if (g == 0 && n == 4) {
        for (int i = 0; i < 4; ++i) {
            std::vector<int> e(4, -2);
            e[i] = -4;
            form[e] = Rational(1, 2);
        }
    } else {
        throw std::invalid_argument("printed_airy_form: no printed form for this type");
    }
    return form;
}

AiryForm airy_form_from_volume(int g, int n) {
    Polynomial volume = kontsevich_volume(g, n);
    AiryForm form;
    for (const auto& [exp, coef] : volume.terms()) {
        std::vector<int> e(n);
        Rational c = coef;
        for (int i = 0; i < n; ++i) {
            int two_d = exp[i]; // even
            e[i] = -(two_d + 2);
            c *= Rational(-factorial(two_d + 1));
        }
        auto it = form.find(e);
        if (it == form.end()) form[e] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) form.erase(it);
        }
    }
    return form;
}

Rational airy_form_value_at_one(const AiryForm& form) {
    Rational total(0);
    for (const auto& [exp, c] : form) total += c;
    return total;
}

AsymptoticReport asymptotic_airy_check(int g, int n, std::vector<Rational> s_values) {
    OmegaForm form;
    if (g == 0 && n == 3) form = OmegaForm::W03;
    else if (g == 1 && n == 1) form = OmegaForm::W11;
    else throw std::invalid_argument("asymptotic_airy_check: type must be (0,3) or (1,1)");
    if (s_values.empty()) throw std::invalid_argument("asymptotic_airy_check: no s values");
    for (const auto& s : s_values)
        if (!(s > Rational(0)) || s > Rational(1, 4))
            throw std::invalid_argument("asymptotic_airy_check: s must lie in (0, 1/4]");

    RationalExpr expr = closed_omega_expr(form);
    Rational airy_at_one = airy_form_value_at_one(printed_airy_form(g, n));

    // The pole-local scaling z_i = 1 + s x_i carries s^{6-6g-3n} on the form
    // and one jacobian factor of s per dropped dz_i, so the coefficient
    // expressions are compared at exponent 6 - 6g - 4n.
    const int exponent = 6 - 6 * g - 4 * n;

    std::sort(s_values.begin(), s_values.end(), [](const Rational& a, const Rational& b) {
        return b < a; // decreasing s
    });
    AsymptoticReport report;
    for (const auto& s : s_values) {
        std::vector<Rational> point(n, Rational(1) + s);
        Rational value = evaluate(expr, point);
        Rational ratio = value / (s.pow(exponent) * airy_at_one);
        Rational gap = (ratio.abs() - Rational(1)).abs();
        report.entries.push_back({s, ratio, gap});
    }
    report.monotone_pass = true;
    for (size_t i = 1; i < report.entries.size(); ++i)
        if (report.entries[i].abs_ratio_gap > report.entries[i - 1].abs_ratio_gap)
            report.monotone_pass = false;
    return report;
}

SeriesDiff compare_omega_series(int g, int n, int order) {
    OmegaForm form;
    if (g == 0 && n == 3) form = OmegaForm::W03;
    else if (g == 1 && n == 1) form = OmegaForm::W11;
    else if (g == 0 && n == 4) form = OmegaForm::W04;
    else throw std::invalid_argument("compare_omega_series: no printed form for this type");

    TruncatedSeries direct = discrete_omega_series(g, n, order);
    TruncatedSeries closed = closed_omega_series(form, order);

    SeriesDiff diff;
    diff.order = order;
    for_each_exponent(n, order, [&](const Exponents& exp) {
        Rational lhs = direct.coefficient(exp);
        Rational rhs = closed.coefficient(exp);
        if (lhs != rhs) diff.mismatches.push_back({exp, lhs, rhs});
    });
    diff.matched = diff.mismatches.empty();
    return diff;
}

} // namespace modcount
