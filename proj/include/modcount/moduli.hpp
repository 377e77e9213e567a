/**
 * @file moduli.hpp
 * @brief The lattice-count functions N_{g,n}: direct enumeration over the
 *        fatgraph catalog, the edge/lollipop-removal recursion, interpolation
 *        to quasi-polynomials, and everything derived from them (Euler
 *        characteristics, volumes, intersection numbers, the dilaton
 *        identity, and the n = 1 polygon-gluing pipeline).
 *
 * N is identically zero for unstable types (2g - 2 + n <= 0) and whenever
 * the length sum is odd. Base cases of the recursion: N(0,3) = 1 on even
 * sums and N(1,1)(b) = (b^2 - 4)/48 on even b.
 */
#pragma once

#include "modcount/quasipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace modcount {

// Weighted sum of strict lattice counts of the incidence systems over the
// labeled catalog. Requires the enumeration frontier 6g - 6 + 3n <= 9.
Rational lattice_count_direct(int g, int n, const std::vector<long long>& b);

// The recursion, memoized; positive lengths, stable (g, n) required.
Rational lattice_count_recursive(int g, int n, const std::vector<long long>& b);

// Fitted quasi-polynomial of degree 3g - 3 + n in the squares; cached
// per process, optionally persisted (see set_cache_directory).
const QuasiPolynomial& lattice_count_quasipolynomial(int g, int n);

// Directory for quasi-polynomial JSON cache files N_g{g}_n{n}.json;
// empty disables persistence.
void set_cache_directory(const std::string& dir);

enum class EulerMethod { Lattice, Zeta };
Rational euler_characteristic(int g, int n, EulerMethod method);

// Half the top-degree (6g - 6 + 2n) homogeneous part of the all-even class.
Polynomial kontsevich_volume(int g, int n);

// psi-intersection numbers from the top coefficients:
// <tau_{d_1}...tau_{d_n}> = c_d * 2^{6g-6+2n-g} * d!
std::map<std::vector<int>, Rational> intersection_numbers(int g, int n);

// (lhs, rhs) of N_{g,n+1}(2,b) - N_{g,n+1}(0,b) = (2g-2+n) N_{g,n}(b).
std::pair<Rational, Rational> dilaton_check(int g, int n, const std::vector<long long>& b);

// Harer-Zagier polygon-gluing tables.
struct HZTable {
    int nmax = 0, kmax = 0;
    std::vector<std::vector<BigInt>> c; // c[n][k], 0 <= n <= nmax, 0 <= k <= kmax
};
// Table by the three-term recursion, cross-checked against the generating
// function ((1+x)/(1-x))^k; throws std::logic_error on mismatch.
HZTable hz_c_table(int nmax, int kmax);

BigInt hz_epsilon(int g, int n); // gluings of a 2n-gon with genus g
BigInt hz_mu(int g, int n);      // ... with no neighbouring edges identified

// N_{g,1}(b) = mu_g(b/2) / b for even b >= 2.
Rational lattice_count_g1_hz(int g, long long b);

// Coefficients c_k of N_{g,1}(b) = sum_k c_k C(b/2 - 1, k - 1), k = 2g..6g-3;
// these are the per-edge-count weighted fatgraph counts.
std::map<int, Rational> binomial_basis_coefficients(int g);

} // namespace modcount
