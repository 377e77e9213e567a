#include "modcount/hurwitz.hpp"

#include "modcount/errors.hpp"
#include "modcount/moduli.hpp"

#include <doctest.h>

#include <algorithm>

using namespace modcount;

TEST_SUITE("hurwitz") {

TEST_CASE("belyi counts of the worked covers") {
    CHECK(belyi_count(1, {4}) == Rational(1, 4));
    CHECK(belyi_count(0, {2, 2, 2, 2}) == Rational(3));
    CHECK(belyi_count(0, {3, 3, 3, 3}) == Rational(8));
    CHECK(belyi_count(0, {1, 1, 2}) == Rational(1));
    CHECK(belyi_count(0, {1, 2}) == Rational(0)); // odd degree
    CHECK_THROWS_AS(belyi_count(0, {8, 6}), FrontierError);
}

TEST_CASE("belyi count is independent of the length ordering") {
    std::vector<long long> b{1, 1, 2, 4};
    std::vector<long long> scrambled{4, 1, 2, 1};
    CHECK(belyi_count(0, b) == belyi_count(0, scrambled));
    CHECK(belyi_count(1, {2, 4}) == belyi_count(1, {4, 2}));
}

TEST_CASE("belyi serial and parallel scans agree") {
    for (auto [g, b] : std::vector<std::pair<int, std::vector<long long>>>{
             {0, {2, 2, 2, 2}}, {1, {4, 4}}, {2, {10}}, {0, {3, 3, 3, 3}}})
        CHECK(belyi_count(g, b) == belyi_count_serial(g, b));
}

TEST_CASE("allowing unramified sheets only adds covers") {
    // M counts allow some r_i = 1, so M >= N pointwise
    for (std::vector<long long> b : {std::vector<long long>{4}, {2, 2}, {1, 1, 2}}) {
        CHECK(belyi_count(0, b, false) >= belyi_count(0, b, true));
        CHECK(belyi_count(1, b, false) >= belyi_count(1, b, true));
    }
}

TEST_CASE("simple Hurwitz numbers by transitive factorization") {
    CHECK(simple_hurwitz(0, Partition{{1, 1, 1}}) == Rational(4));
    CHECK(simple_hurwitz(1, Partition{{2}}) == Rational(1, 2));
    CHECK(simple_hurwitz(1, Partition{{1}}) == Rational(0)); // degree-1 covers have genus 0
    CHECK(simple_hurwitz(0, Partition{{2, 1}}) == Rational(4));
    CHECK(simple_hurwitz(0, Partition{{3, 1}}) == Rational(27));
    CHECK(simple_hurwitz(0, Partition{{2, 1, 1}}) == Rational(120));
    CHECK_THROWS_AS(simple_hurwitz(0, Partition{{7}}), FrontierError);
    CHECK(simple_hurwitz_serial(1, Partition{{2, 1}}) == simple_hurwitz(1, Partition{{2, 1}}));
}

TEST_CASE("labeled simple Hurwitz numbers") {
    // H_{0,3}(1,1,1) = |Aut mu| / r! * H = 6/24 * 4
    CHECK(labeled_simple_hurwitz(0, Partition{{1, 1, 1}}) == Rational(1));
    CHECK(labeled_simple_hurwitz(1, Partition{{2}}) == Rational(1, 2) * Rational(1, 6));
}

TEST_CASE("class trace of the worked factorization problems") {
    CHECK(class_trace(BranchData{4, {Partition{{4}}, Partition{{2, 2}}, Partition{{4}}}}) ==
          Rational(1, 4));
    CHECK(class_trace(BranchData{3, {Partition{{1, 1, 1}}}}) == Rational(1, 6));
    CHECK(class_trace(BranchData{2, {Partition{{2}}, Partition{{2}}}}) == Rational(1, 2));
    CHECK_THROWS_AS(class_trace(BranchData{9, {Partition{{9}}}}), FrontierError);
    CHECK_THROWS_AS(BranchData({4, {Partition{{3}}}}).validate(), std::invalid_argument);
}

TEST_CASE("a full cycle over infinity forces connectedness") {
    // For b = (d) the disconnected trace, summed over unit-free profiles of
    // the right cycle count, equals the connected Belyi count.
    for (auto [g, d] : {std::pair{1, 4}, {1, 6}, {2, 8}, {1, 8}}) {
        const int want_cycles = 1 - 2 * g + d / 2;
        REQUIRE(want_cycles >= 1);
        // partitions of d into want_cycles parts, all parts >= 2
        std::vector<std::vector<int>> profiles;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int remaining, int slots, int max_part) -> void {
            if (slots == 0) {
                if (remaining == 0) profiles.push_back(cur);
                return;
            }
            for (int p = std::min(remaining - 2 * (slots - 1), max_part); p >= 2; --p) {
                cur.push_back(p);
                self(self, remaining - p, slots - 1, p);
                cur.pop_back();
            }
        };
        rec(rec, d, want_cycles, d);
        Rational disconnected(0);
        Partition twos{std::vector<int>(d / 2, 2)};
        for (const auto& profile : profiles)
            disconnected +=
                class_trace(BranchData{d, {Partition{profile}, twos, Partition{{d}}}});
        CHECK(disconnected == belyi_count(g, {d}));
    }
}

TEST_CASE("ELSV evaluations against the factorization oracle") {
    CHECK(elsv_hurwitz(0, Partition{{1, 1, 1}}) == Rational(4));
    CHECK(elsv_hurwitz(1, Partition{{2}}) == Rational(1, 2));
    CHECK(elsv_hurwitz(0, Partition{{2, 1}}) == Rational(4));
    CHECK(elsv_hurwitz(0, Partition{{2, 1, 1}}) == Rational(120));
    CHECK_THROWS_AS(elsv_hurwitz(2, Partition{{1}}), FrontierError);

    const std::vector<std::pair<int, std::vector<int>>> supported = {
        {0, {1, 1}},    {0, {2, 1}},    {0, {2, 2}},    {0, {3, 1}},    {0, {4, 1}},
        {0, {3, 2}},    {0, {1, 1, 1}}, {0, {2, 1, 1}}, {0, {2, 2, 1}}, {0, {3, 1, 1}},
        {0, {1, 1, 1, 1}}, {0, {2, 1, 1, 1}}, {1, {1}},   {1, {2}},    {1, {3}},
        {1, {4}},       {1, {1, 1}},    {1, {2, 1}},    {1, {2, 2}},    {1, {3, 1}},
    };
    for (const auto& [g, parts] : supported) {
        Partition mu{parts};
        CHECK(simple_hurwitz(g, mu) == elsv_hurwitz(g, mu));
    }
}

TEST_CASE("belyi counts reproduce lattice counts") {
    CHECK(belyi_count(1, {4}) == lattice_count_recursive(1, 1, {4}));
    CHECK(belyi_count(0, {2, 2, 2, 2}) == lattice_count_recursive(0, 4, {2, 2, 2, 2}));
    CHECK(belyi_count(1, {4, 2}) == lattice_count_recursive(1, 2, {4, 2}));
    CHECK(belyi_count(2, {8}) == lattice_count_recursive(2, 1, {8}));
    CHECK(belyi_count(0, {2, 2, 4, 2, 2}) == lattice_count_recursive(0, 5, {2, 2, 4, 2, 2}));
}

TEST_CASE("partition plumbing") {
    Partition mu{{3, 1, 1}};
    CHECK(mu.size() == 5);
    CHECK(mu.to_string() == "3,1,1");
    CHECK(mu.automorphisms() == BigInt(2));
    CHECK(mu.centralizer_order() == BigInt(6));
    Partition increasing{{1, 2}};
    CHECK_THROWS_AS(increasing.validate(), std::invalid_argument);
    Partition zero_part{{0}};
    CHECK_THROWS_AS(zero_part.validate(), std::invalid_argument);
}

} // TEST_SUITE
