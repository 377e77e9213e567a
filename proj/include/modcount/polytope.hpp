/**
 * @file polytope.hpp
 * @brief Vector-partition-function machinery for P_A(b) = {x >= 0 : Ax = b}
 *        with a nonnegative integer matrix A.
 *
 * Counts are exhaustive bounded searches; volumes come from an exact dilation
 * oracle (leading coefficient of the dilated count polynomial divided by the
 * lattice index), not from chamber decompositions.
 */
#pragma once

#include "modcount/polynomial.hpp"
#include "modcount/series.hpp"

#include <vector>

namespace modcount {

struct ConstraintSystem {
    // rows[i][j]: coefficient of x_j in equation i; nonnegative, no zero column.
    std::vector<std::vector<long long>> rows;

    int equations() const { return static_cast<int>(rows.size()); }
    int unknowns() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
    void validate() const;
};

// Number of integer solutions of Ax = b with x_i >= 1 (strict) or x_i >= 0.
// An empty polytope yields 0.
BigInt count_lattice_points(const ConstraintSystem& sys, const std::vector<long long>& b,
                            bool strict);

// Index of the sublattice A.Z^N inside Z^n, i.e. the product of the
// elementary divisors of A (= gcd of the maximal minors). Requires full row
// rank; throws std::domain_error otherwise.
BigInt lattice_index(const ConstraintSystem& sys);

// Quotient volume V_{P_A}(b) via the dilation oracle. Returns 0 for an empty
// polytope; throws std::domain_error for a degenerate direction (counts grow
// with degree below the polytope dimension).
Rational polytope_volume(const ConstraintSystem& sys, const std::vector<long long>& b);

struct LaplaceProductForm {
    std::vector<std::vector<long long>> columns; // the alpha_i
};

// Column list of A; expanding the product prod_i z^alpha_i / (1 - z^alpha_i)
// reproduces the strict lattice counts coefficientwise.
LaplaceProductForm vpf_laplace_form(const ConstraintSystem& sys);
TruncatedSeries expand_laplace_form(const LaplaceProductForm& form, int order);

// Univariate Ehrhart polynomial p(k) fitting the non-strict counts at k*b0,
// verified at k = T+1. With check_reciprocity, also verifies
// strict(k) == (-1)^(N-n) p(-k) for k = 1..T.
Polynomial ehrhart_polynomial(const ConstraintSystem& sys, const std::vector<long long>& b0,
                              int T, bool check_reciprocity = true);

} // namespace modcount
