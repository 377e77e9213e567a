#include "modcount/fatgraph.hpp"

#include "modcount/bernoulli.hpp"
#include "modcount/moduli.hpp"
#include "modcount/rational.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

using namespace modcount;

namespace {

Fatgraph figure_eight_genus1() {
    // one 4-valent vertex, tau1 pairs opposite half-edges
    Fatgraph g;
    g.vertex_perm = {1, 2, 3, 0};
    g.edge_perm = {2, 3, 0, 1};
    g.boundary_labels = {1};
    return g;
}

Fatgraph figure_eight_genus0() {
    // same vertex, tau1 pairs adjacent half-edges
    Fatgraph g;
    g.vertex_perm = {1, 2, 3, 0};
    g.edge_perm = {1, 0, 3, 2};
    g.boundary_labels = {1, 2, 3};
    return g;
}

Fatgraph theta_graph() {
    Fatgraph g;
    g.vertex_perm = {1, 2, 0, 4, 5, 3};       // (0 1 2)(3 4 5)
    g.edge_perm = {3, 5, 4, 0, 2, 1};         // (0 3)(1 5)(2 4)
    g.boundary_labels = {2, 1, 3};            // cycles {0,4},{1,3},{2,5}
    return g;
}

Fatgraph trivalent_genus1() {
    Fatgraph g;
    g.vertex_perm = {1, 2, 0, 4, 5, 3}; // (0 1 2)(3 4 5)
    g.edge_perm = {3, 4, 5, 0, 1, 2};   // (0 3)(1 4)(2 5)
    g.boundary_labels = {1};
    return g;
}

// labeled isomorphism via half-edge extension from every candidate image
bool labeled_isomorphic(const Fatgraph& a, const Fatgraph& b) {
    if (a.half_edge_count() != b.half_edge_count()) return false;
    const int m = a.half_edge_count();
    auto labels_of = [](const Fatgraph& f) {
        std::vector<int> lab(f.half_edge_count());
        auto cycles = f.boundary_cycles();
        for (size_t c = 0; c < cycles.size(); ++c)
            for (int h : cycles[c]) lab[h] = f.boundary_labels[c];
        return lab;
    };
    std::vector<int> la = labels_of(a), lb = labels_of(b);
    for (int s = 0; s < m; ++s) {
        std::vector<int> phi(m, -1);
        phi[0] = s;
        std::vector<int> queue{0};
        bool ok = true;
        for (size_t head = 0; head < queue.size() && ok; ++head) {
            int h = queue[head];
            const int moves[2][2] = {{a.vertex_perm[h], b.vertex_perm[phi[h]]},
                                     {a.edge_perm[h], b.edge_perm[phi[h]]}};
            for (const auto& mv : moves) {
                if (phi[mv[0]] < 0) {
                    phi[mv[0]] = mv[1];
                    queue.push_back(mv[0]);
                } else if (phi[mv[0]] != mv[1]) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        for (int h = 0; h < m && ok; ++h) ok = la[h] == lb[phi[h]];
        if (ok) return true;
    }
    return false;
}

} // namespace

TEST_SUITE("fatgraph") {

TEST_CASE("boundary profiles of the small graphs") {
    auto [g1, b1] = boundary_profile(figure_eight_genus1());
    CHECK(g1 == 1);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].length_half_edges == 4);

    auto [g0, b0] = boundary_profile(figure_eight_genus0());
    CHECK(g0 == 0);
    CHECK(b0.size() == 3);

    auto [gt, bt] = boundary_profile(theta_graph());
    CHECK(gt == 0);
    REQUIRE(bt.size() == 3);
    for (const auto& info : bt) CHECK(info.length_half_edges == 2);
}

TEST_CASE("automorphism orders") {
    CHECK(automorphism_order(trivalent_genus1()) == 6);
    CHECK(automorphism_order(figure_eight_genus1()) == 4);
    for (const auto& entry : cached_catalog(0, 3).entries)
        CHECK(automorphism_order(entry.graph) == 1);
}

TEST_CASE("incidence matrices") {
    std::vector<std::vector<long long>> theta_want{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    CHECK(incidence_matrix(theta_graph()) == theta_want);
    CHECK(incidence_matrix(trivalent_genus1()) ==
          std::vector<std::vector<long long>>{{2, 2, 2}});
    CHECK(incidence_matrix(figure_eight_genus1()) ==
          std::vector<std::vector<long long>>{{2, 2}});
}

TEST_CASE("structure validation catches corruption") {
    Fatgraph bad = figure_eight_genus1();
    bad.edge_perm = {0, 1, 2, 3}; // fixed points
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    Fatgraph bivalent;
    bivalent.vertex_perm = {1, 0, 3, 2}; // two 2-valent vertices
    bivalent.edge_perm = {2, 3, 0, 1};
    bivalent.boundary_labels = {1, 2};
    CHECK_THROWS_AS(bivalent.validate(), std::invalid_argument);

    Fatgraph mislabeled = figure_eight_genus1();
    mislabeled.boundary_labels = {2};
    CHECK_THROWS_AS(mislabeled.validate(), std::invalid_argument);
}

TEST_CASE("catalog of type (1,1) has the two known classes") {
    const FatgraphCatalog& catalog = cached_catalog(1, 1);
    REQUIRE(catalog.entries.size() == 2);
    std::multiset<long> auts;
    for (const auto& e : catalog.entries) auts.insert(e.aut_order);
    CHECK(auts == std::multiset<long>{4, 6});
    CHECK(catalog.unlabeled_classes == 2);
}

TEST_CASE("catalog of type (0,4): 327 labeled classes from 21 unlabeled") {
    const FatgraphCatalog& catalog = cached_catalog(0, 4);
    CHECK(catalog.entries.size() == 327);
    CHECK(catalog.unlabeled_classes == 21);
    // cells per dimension: E = 6,5,4,3 carry 64, 144, 99, 20 classes
    std::map<int, int> by_edges;
    for (const auto& e : catalog.entries) ++by_edges[e.graph.edge_count()];
    CHECK(by_edges == std::map<int, int>{{3, 20}, {4, 99}, {5, 144}, {6, 64}});
}

TEST_CASE("catalog entries satisfy the incidence invariants") {
    for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {0, 4}, {1, 2}}) {
        for (const auto& entry : cached_catalog(g, n).entries) {
            auto matrix = incidence_matrix(entry.graph);
            long long total = 0;
            for (size_t c = 0; c < matrix[0].size(); ++c) {
                long long col = 0;
                for (const auto& row : matrix) col += row[c];
                CHECK(col == 2);
            }
            for (const auto& row : matrix)
                total += std::accumulate(row.begin(), row.end(), 0LL);
            CHECK(total == 2 * entry.graph.edge_count());
            CHECK(automorphism_order(entry.graph) == entry.aut_order);
        }
    }
}

TEST_CASE("weighted signed class counts give the Euler characteristic") {
    for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {0, 4}, {1, 2}}) {
        Rational sum(0);
        for (const auto& entry : cached_catalog(g, n).entries) {
            Rational w(1, entry.aut_order);
            // open cells of dimension E contribute (-1)^E; the n decoration
            // directions contribute (-1)^n
            if ((entry.graph.edge_count() - n) % 2 != 0) w = -w;
            sum += w;
        }
        CHECK(sum == euler_characteristic(g, n, EulerMethod::Zeta));
    }
}

TEST_CASE("catalogs are closed under boundary relabeling") {
    for (auto [g, n] : {std::pair{0, 3}, {1, 2}}) {
        const auto& catalog = cached_catalog(g, n);
        for (const auto& entry : catalog.entries) {
            Fatgraph permuted = entry.graph;
            for (int& lab : permuted.boundary_labels) lab = lab % n + 1; // cyclic shift
            bool found = false;
            for (const auto& other : catalog.entries)
                if (labeled_isomorphic(permuted, other.graph)) {
                    found = true;
                    break;
                }
            CHECK(found);
        }
    }
}

TEST_CASE("parallel and serial enumeration agree") {
    for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {0, 4}, {1, 2}}) {
        FatgraphCatalog parallel = enumerate_fatgraphs(g, n);
        FatgraphCatalog serial = enumerate_fatgraphs_serial(g, n);
        REQUIRE(parallel.entries.size() == serial.entries.size());
        for (size_t i = 0; i < parallel.entries.size(); ++i) {
            CHECK(to_text(parallel.entries[i].graph) == to_text(serial.entries[i].graph));
            CHECK(parallel.entries[i].aut_order == serial.entries[i].aut_order);
        }
    }
}

TEST_CASE("text format round trip") {
    for (const auto& entry : cached_catalog(1, 2).entries) {
        Fatgraph parsed = fatgraph_from_text(to_text(entry.graph));
        CHECK(parsed.vertex_perm == entry.graph.vertex_perm);
        CHECK(parsed.edge_perm == entry.graph.edge_perm);
        CHECK(parsed.boundary_labels == entry.graph.boundary_labels);
    }
    CHECK_THROWS_AS(fatgraph_from_text("junk"), std::invalid_argument);
    CHECK_THROWS_AS(fatgraph_from_text("2;(0 1 2 3);(0 2)(1 3)"), std::invalid_argument);
}

TEST_CASE("enumeration frontier") {
    CHECK_THROWS_AS(enumerate_fatgraphs(2, 2), FrontierError);   // 6g-6+3n = 12
    CHECK_THROWS_AS(enumerate_fatgraphs(0, 2), std::invalid_argument); // unstable
}

} // TEST_SUITE
