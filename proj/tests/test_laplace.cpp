#include "modcount/laplace.hpp"

#include "modcount/moduli.hpp"

#include <doctest.h>

#include <numeric>

using namespace modcount;

TEST_SUITE("laplace") {

TEST_CASE("total-derivative series from direct values") {
    TruncatedSeries w03 = discrete_omega_series(0, 3, 6);
    CHECK(w03.coefficient({0, 0, 1}) == Rational(2)); // 1*1*2 * N(1,1,2)
    CHECK(w03.coefficient({0, 0, 0}) == Rational(0)); // odd sum

    TruncatedSeries w11 = discrete_omega_series(1, 1, 9);
    CHECK(w11.coefficient({3}) == Rational(1)); // 4 * N(4) = 4/4
    CHECK(w11.coefficient({2}) == Rational(0)); // odd length
    CHECK(w11.coefficient({5}) == Rational(4)); // 6 * N(6) = 6 * 32/48
}

TEST_CASE("printed closed forms match the series") {
    CHECK(compare_omega_series(0, 3, 12).matched);
    CHECK(compare_omega_series(1, 1, 12).matched);
}

TEST_CASE("total-derivative consistency against the quasi-polynomial") {
    TruncatedSeries w12 = discrete_omega_series(1, 2, 8);
    const QuasiPolynomial& qp = lattice_count_quasipolynomial(1, 2);
    bool all_match = true;
    for_each_exponent(2, 8, [&](const Exponents& e) {
        std::vector<long long> b{e[0] + 1, e[1] + 1};
        Rational want = Rational(b[0] * b[1]) * qp.evaluate(b);
        if (w12.coefficient(e) != want) all_match = false;
    });
    CHECK(all_match);
}

TEST_CASE("the printed four-boundary form differs only on mixed parity classes") {
    SeriesDiff diff = compare_omega_series(0, 4, 8);
    // direct value at b = (2,1,1,2): 4 * N = 8, independently pinned by the
    // cover count N(2,1,1,2) = 2
    CHECK(lattice_count_recursive(0, 4, {2, 1, 1, 2}) == Rational(2));
    TruncatedSeries direct = discrete_omega_series(0, 4, 6);
    CHECK(direct.coefficient({1, 0, 0, 1}) == Rational(8));

    for (const auto& m : diff.mismatches) {
        int odd = 0;
        for (int e : m.exp) odd += e % 2 == 0 ? 1 : 0; // b_i = e_i + 1 odd iff e_i even
        CHECK(odd != 0);
        CHECK(odd != 4);
    }
}

TEST_CASE("pole-local forms from the volume route") {
    CHECK(airy_form_from_volume(0, 3) == printed_airy_form(0, 3));
    CHECK(airy_form_from_volume(1, 1) == printed_airy_form(1, 1));

    AiryForm v11 = airy_form_from_volume(1, 1);
    REQUIRE(v11.size() == 1);
    CHECK(v11.at({-4}) == Rational(-1, 16));

    // the four-boundary forms disagree by an overall constant
    Rational ratio = airy_form_value_at_one(airy_form_from_volume(0, 4)) /
                     airy_form_value_at_one(printed_airy_form(0, 4));
    CHECK(ratio == Rational(3, 2));
}

TEST_CASE("asymptotic ratios approach one in absolute value") {
    std::vector<Rational> svals{Rational(1, 4), Rational(1, 10), Rational(1, 100)};
    AsymptoticReport report = asymptotic_airy_check(1, 1, svals);
    REQUIRE(report.entries.size() == 3);
    CHECK(report.monotone_pass);
    // |ratio| = 16 (1+s)^3 / (2+s)^4 exactly
    CHECK(report.entries[1].ratio.abs() ==
          Rational(16) * Rational(11, 10).pow(3) / Rational(21, 10).pow(4));
    CHECK(report.entries[1].abs_ratio_gap < Rational(2, 5));   // within 40% at s = 1/10
    CHECK(report.entries[2].abs_ratio_gap < Rational(1, 20));  // within 5% at s = 1/100

    AsymptoticReport r03 = asymptotic_airy_check(0, 3, svals);
    CHECK(r03.monotone_pass);
    CHECK(r03.entries[2].abs_ratio_gap < Rational(1, 20));

    CHECK_THROWS_AS(asymptotic_airy_check(1, 1, {Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_airy_check(1, 1, {Rational(1, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_airy_check(0, 4, svals), std::invalid_argument);
}

} // TEST_SUITE
