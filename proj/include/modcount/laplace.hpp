/**
 * @file laplace.hpp
 * @brief Discrete Laplace-transform identities for the lattice counts: the
 *        total-derivative series, the printed closed forms and their
 *        pole-local (Airy) limits, and the exact asymptotic ratio check.
 *
 * Differentials are dropped throughout; forms are compared as coefficient
 * series or Laurent-monomial sums.
 */
#pragma once

#include "modcount/ratexpr.hpp"

#include <map>
#include <optional>
#include <vector>

namespace modcount {

// Coefficient of prod z_i^{b_i - 1} is prod b_i * N_{g,n}(b).
TruncatedSeries discrete_omega_series(int g, int n, int order);

enum class OmegaForm { W03, W11, W04 };

// The printed closed discrete forms (coefficient part only).
RationalExpr closed_omega_expr(OmegaForm form);
TruncatedSeries closed_omega_series(OmegaForm form, int order);

// Sums of Laurent monomials in the pole-local variables; exponents may be
// negative.
using AiryForm = std::map<std::vector<int>, Rational>;

// The printed pole-local forms for (0,3), (1,1), (0,4).
AiryForm printed_airy_form(int g, int n);

// Termwise continuous Laplace transform of the volume polynomial followed by
// one derivative per variable: c * prod b_i^{2 d_i} contributes
// c * prod(-(2 d_i + 1)!) at exponents -(2 d_i + 2).
AiryForm airy_form_from_volume(int g, int n);

Rational airy_form_value_at_one(const AiryForm& form);

struct AsymptoticEntry {
    Rational s;
    Rational ratio;          // discrete form at z = 1+s over s^e * airy at 1
    Rational abs_ratio_gap;  // | |ratio| - 1 |
};
struct AsymptoticReport {
    std::vector<AsymptoticEntry> entries; // sorted by decreasing s
    bool monotone_pass = false;           // gaps non-increasing as s shrinks
};

// Exact rational evaluation of the closed discrete form at z_i = 1 + s
// against the pole-local form; only (0,3) and (1,1) have closed forms that
// match the series, so only those are accepted. s values must lie in
// (0, 1/4].
AsymptoticReport asymptotic_airy_check(int g, int n, std::vector<Rational> s_values);

struct SeriesMismatch {
    Exponents exp;
    Rational direct;
    Rational closed_form;
};
struct SeriesDiff {
    bool matched = false;
    int order = 0;
    std::vector<SeriesMismatch> mismatches;
    std::optional<SeriesMismatch> first_mismatch() const {
        return mismatches.empty() ? std::nullopt : std::optional(mismatches.front());
    }
};

// Coefficientwise diff of the printed closed form against the direct series.
SeriesDiff compare_omega_series(int g, int n, int order);

} // namespace modcount
