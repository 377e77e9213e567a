#include "modcount/moduli.hpp"

#include "modcount/bernoulli.hpp"
#include "modcount/fatgraph.hpp"
#include "modcount/polytope.hpp"

#include <doctest.h>

#include <numeric>

using namespace modcount;

TEST_SUITE("moduli") {

TEST_CASE("recursion reproduces the worked values") {
    CHECK(lattice_count_recursive(1, 1, {4}) == Rational(1, 4));
    CHECK(lattice_count_recursive(0, 3, {1, 1, 2}) == Rational(1));
    CHECK(lattice_count_recursive(0, 3, {1, 1, 1}) == Rational(0));
    CHECK(lattice_count_recursive(0, 4, {2, 2, 2, 2}) == Rational(3));
    CHECK(lattice_count_recursive(0, 4, {3, 3, 3, 3}) == Rational(8));
    CHECK(lattice_count_recursive(1, 2, {4, 2}) == Rational(1, 2));
    CHECK(lattice_count_recursive(2, 1, {8}) == Rational(21, 8));
    CHECK(lattice_count_recursive(0, 4, {1, 1, 1, 2}) == Rational(0)); // odd sum
    CHECK_THROWS_AS(lattice_count_recursive(0, 2, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(lattice_count_recursive(1, 1, {0}), std::invalid_argument);
}

TEST_CASE("direct catalog counts match the worked values") {
    CHECK(lattice_count_direct(1, 1, {4}) == Rational(1, 4));
    CHECK(lattice_count_direct(0, 4, {2, 2, 2, 2}) == Rational(3));
    CHECK(lattice_count_direct(0, 3, {1, 1, 1}) == Rational(0));
    CHECK_THROWS_AS(lattice_count_direct(2, 2, {2, 2}), FrontierError);
}

TEST_CASE("direct enumeration agrees with the recursion") {
    for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {0, 4}, {1, 2}}) {
        std::vector<long long> b(n);
        auto walk = [&](auto&& self, int pos, long long budget) -> void {
            if (pos == n) {
                CHECK(lattice_count_direct(g, n, b) == lattice_count_recursive(g, n, b));
                return;
            }
            for (long long v = 1; v <= budget - (n - pos - 1); ++v) {
                b[pos] = v;
                self(self, pos + 1, budget - v);
            }
        };
        walk(walk, 0, n <= 2 ? 20 : 14);
    }
    // the small-type sweeps extended to length sum 20, sorted representatives
    for (auto [g, n] : {std::pair{0, 3}, {0, 4}, {1, 2}}) {
        std::vector<long long> b(n);
        auto walk = [&](auto&& self, int pos, long long budget, long long lo) -> void {
            if (pos == n) {
                long long sum = std::accumulate(b.begin(), b.end(), 0LL);
                if (sum > 14 && sum <= 20)
                    CHECK(lattice_count_direct(g, n, b) == lattice_count_recursive(g, n, b));
                return;
            }
            for (long long v = lo; v <= budget - (n - pos - 1); ++v) {
                b[pos] = v;
                self(self, pos + 1, budget - v, v);
            }
        };
        walk(walk, 0, 20, 1);
    }
    // frontier types, sampled up to length sum 20
    for (long long b :
         {2LL, 4LL, 8LL, 10LL, 12LL, 14LL, 16LL, 18LL, 20LL})
        CHECK(lattice_count_direct(2, 1, {b}) == lattice_count_recursive(2, 1, {b}));
    const std::vector<std::vector<long long>> b05 = {
        {2, 2, 2, 1, 1}, {2, 2, 2, 2, 2}, {3, 3, 2, 2, 2}, {6, 4, 4, 2, 2},
        {5, 5, 4, 3, 3}, {4, 4, 4, 4, 4}, {7, 5, 4, 2, 2}, {6, 6, 4, 2, 2}};
    for (const auto& b : b05)
        CHECK(lattice_count_direct(0, 5, b) == lattice_count_recursive(0, 5, b));
    const std::vector<std::vector<long long>> b13 = {
        {2, 2, 4}, {1, 1, 2}, {4, 4, 4},  {5, 5, 2},  {6, 4, 4},
        {8, 6, 2}, {7, 7, 4}, {8, 8, 4}, {9, 7, 2}, {10, 6, 4}};
    for (const auto& b : b13)
        CHECK(lattice_count_direct(1, 3, b) == lattice_count_recursive(1, 3, b));
}

TEST_CASE("quasi-polynomials match the printed rows") {
    // (1,1): (b^2 - 4)/48 on the even class
    Polynomial even11(1);
    even11.add_term({2}, Rational(1, 48));
    even11.add_term({0}, Rational(-1, 12));
    CHECK(lattice_count_quasipolynomial(1, 1).class_poly({0}) == even11);

    // (0,4): even class (sum b_i^2 - 4)/4 and odd-pair class (sum b_i^2 - 2)/4
    Polynomial even04(4);
    for (int i = 0; i < 4; ++i) {
        Exponents e(4, 0);
        e[i] = 2;
        even04.add_term(e, Rational(1, 4));
    }
    Polynomial odd04 = even04;
    even04.add_term(Exponents(4, 0), Rational(-1));
    odd04.add_term(Exponents(4, 0), Rational(-1, 2));
    CHECK(lattice_count_quasipolynomial(0, 4).class_poly({0, 0, 0, 0}) == even04);
    CHECK(lattice_count_quasipolynomial(0, 4).class_poly({1, 1, 0, 0}) == odd04);
    CHECK(lattice_count_quasipolynomial(0, 4).class_poly({0, 1, 0, 1}) == odd04);

    // fitted values reproduce the recursion away from the sample grid
    CHECK(lattice_count_quasipolynomial(0, 4).evaluate({10, 2, 4, 6}) ==
          lattice_count_recursive(0, 4, {10, 2, 4, 6}));
    CHECK(lattice_count_quasipolynomial(1, 2).evaluate({12, 8}) ==
          lattice_count_recursive(1, 2, {12, 8}));
}

TEST_CASE("euler characteristics by both routes") {
    CHECK(euler_characteristic(1, 1, EulerMethod::Lattice) == Rational(-1, 12));
    CHECK(euler_characteristic(1, 1, EulerMethod::Zeta) == Rational(-1, 12));
    CHECK(euler_characteristic(0, 4, EulerMethod::Lattice) == Rational(-1));
    CHECK(euler_characteristic(0, 4, EulerMethod::Zeta) == Rational(-1));
    CHECK(euler_characteristic(2, 1, EulerMethod::Lattice) == Rational(1, 120));
    CHECK(euler_characteristic(2, 1, EulerMethod::Zeta) == Rational(1, 120));
    CHECK(euler_characteristic(1, 2, EulerMethod::Lattice) ==
          euler_characteristic(1, 2, EulerMethod::Zeta));
    CHECK(euler_characteristic(0, 5, EulerMethod::Zeta) == Rational(2));
    CHECK(euler_characteristic(0, 3, EulerMethod::Zeta) == Rational(1));
}

TEST_CASE("volume polynomials match the printed table") {
    Polynomial v11(1);
    v11.add_term({2}, Rational(1, 96));
    CHECK(kontsevich_volume(1, 1) == v11);

    Polynomial v04(4);
    for (int i = 0; i < 4; ++i) {
        Exponents e(4, 0);
        e[i] = 2;
        v04.add_term(e, Rational(1, 8));
    }
    CHECK(kontsevich_volume(0, 4) == v04);

    Polynomial v21(1);
    v21.add_term({8}, Rational(BigInt(1), BigInt(131072) * 27)); // 2^17 3^3
    CHECK(kontsevich_volume(2, 1) == v21);

    CHECK(kontsevich_volume(0, 3) == Polynomial::constant(3, Rational(1, 2)));
}

TEST_CASE("intersection numbers from the top coefficients") {
    auto psi11 = intersection_numbers(1, 1);
    CHECK(psi11.at({1}) == Rational(1, 24));
    auto psi03 = intersection_numbers(0, 3);
    CHECK(psi03.at({0, 0, 0}) == Rational(1));
    auto psi04 = intersection_numbers(0, 4);
    CHECK(psi04.at({1, 0, 0, 0}) == Rational(1));
}

TEST_CASE("dilaton identity") {
    auto [lhs11, rhs11] = dilaton_check(1, 1, {4});
    CHECK(lhs11 == Rational(1, 4));
    CHECK(rhs11 == Rational(1, 4));
    auto [lhs03, rhs03] = dilaton_check(0, 3, {2, 2, 2});
    CHECK(rhs03 == Rational(1));
    CHECK(lhs03 == rhs03);
    // vanishing at (2, 0, ..., 0)
    CHECK(lattice_count_quasipolynomial(1, 3).evaluate({2, 0, 0}) == Rational(0));
    CHECK(lattice_count_quasipolynomial(1, 2).evaluate({2, 0}) == Rational(0));
}

TEST_CASE("harer-zagier c-table") {
    HZTable table = hz_c_table(6, 7);
    for (int k = 0; k <= 7; ++k) {
        CHECK(table.c[0][k] == BigInt(k));                      // c(0,k) = k
        CHECK(table.c[1][k] == BigInt(k) * k);                  // c(1,k) = k^2
        CHECK(table.c[2][k] == (2 * BigInt(k) * k * k + k) / 3); // c(2,k) = (2k^3+k)/3
    }
    for (int n = 0; n <= 6; ++n) CHECK(table.c[n][0] == BigInt(0));
}

TEST_CASE("polygon gluing counts") {
    CHECK(hz_epsilon(1, 2) == BigInt(1));
    CHECK(hz_mu(1, 2) == BigInt(1));
    CHECK(hz_mu(0, 1) == BigInt(1));
    CHECK(hz_mu(1, 1) == BigInt(0));
    CHECK(hz_mu(2, 3) == BigInt(0)); // below the genus bound
}

TEST_CASE("n = 1 values through the polygon pipeline") {
    CHECK(lattice_count_g1_hz(1, 4) == Rational(1, 4));
    CHECK(lattice_count_g1_hz(1, 2) == Rational(0));
    CHECK(lattice_count_g1_hz(2, 8) == Rational(21, 8));
    CHECK_THROWS_AS(lattice_count_g1_hz(1, 3), std::invalid_argument);
    for (int g : {1, 2, 3})
        for (long long b = 2; b <= 16; b += 2)
            CHECK(lattice_count_g1_hz(g, b) == lattice_count_recursive(g, 1, {b}));
    for (int g : {1, 2})
        for (long long b = 2; b <= 16; b += 2)
            CHECK(lattice_count_g1_hz(g, b) == lattice_count_direct(g, 1, {b}));
}

TEST_CASE("binomial basis coefficients are weighted class counts") {
    auto coeffs = binomial_basis_coefficients(1);
    CHECK(coeffs.at(2) == Rational(1, 4)); // the 4-valent one-vertex class
    CHECK(coeffs.at(3) == Rational(1, 6)); // the trivalent class
    for (int g : {1, 2}) {
        std::map<int, Rational> from_catalog;
        for (const auto& entry : cached_catalog(g, 1).entries)
            from_catalog[entry.graph.edge_count()] += Rational(1, entry.aut_order);
        CHECK(binomial_basis_coefficients(g) == from_catalog);
    }
}

TEST_CASE("counts inside one chamber fit a single polynomial of degree E - n") {
    // Fix a trivalent type (0,4) graph whose edges all meet two distinct
    // boundaries (a self-incident edge adds walls beyond the sign
    // arrangement) and sample far inside the chamber b1 > b2 + b3 + b4 on
    // the all-even coset.
    const auto& catalog = cached_catalog(0, 4);
    const CatalogEntry* trivalent = nullptr;
    for (const auto& entry : catalog.entries) {
        if (entry.graph.edge_count() != 6) continue;
        auto matrix = incidence_matrix(entry.graph);
        bool self_incident = false;
        for (const auto& row : matrix)
            for (long long v : row) self_incident |= v == 2;
        if (!self_incident) {
            trivalent = &entry;
            break;
        }
    }
    REQUIRE(trivalent != nullptr);
    ConstraintSystem sys{incidence_matrix(trivalent->graph)};

    // monomial fit of total degree <= 2 in (b1, b2, b3, b4); three values per
    // slot so the quadratic monomials are determined
    std::vector<Exponents> monomials;
    for_each_exponent(4, 2, [&](const Exponents& e) { monomials.push_back(e); });
    std::vector<std::vector<BigInt>> mat;
    std::vector<Rational> rhs;
    for (long long b1 : {30, 34, 38, 42})
        for (long long b2 : {2, 4, 6})
            for (long long b3 : {2, 4, 6})
                for (long long b4 : {2, 4, 6}) {
                    std::vector<BigInt> row;
                    for (const auto& e : monomials) {
                        BigInt m = 1;
                        const long long b[4] = {b1, b2, b3, b4};
                        for (int i = 0; i < 4; ++i)
                            for (int k = 0; k < e[i]; ++k) m *= b[i];
                        row.push_back(m);
                    }
                    mat.push_back(std::move(row));
                    rhs.push_back(Rational(count_lattice_points(sys, {b1, b2, b3, b4}, true)));
                }
    LinearSolve solved = solve_exact(std::move(mat), std::move(rhs));
    CHECK(solved.status == LinearSolve::Status::Ok);
}

} // TEST_SUITE
