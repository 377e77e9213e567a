/**
 * @file fatgraph.hpp
 * @brief Labeled fatgraphs (ribbon graphs) as permutation pairs on half-edges,
 *        their automorphisms, incidence matrices, and exhaustive enumeration
 *        by type (g, n).
 *
 * A fatgraph is the pair (tau0, tau1) on half-edges 0..2E-1: tau1 is the
 * fixed-point-free involution pairing the two halves of each edge, tau0
 * cycles the half-edges at each vertex (every cycle has length >= 3), and
 * the boundary components are the cycles of tau2 = tau0 . tau1. Boundary
 * cycles carry labels 1..n.
 *
 * Enumeration fixes tau0 per vertex-valence multiset and scans the
 * fixed-point-free involutions tau1, deduplicating by a canonical rooted
 * encoding. The scan is data-parallel; a serial reference path is kept for
 * testing (see bench/).
 */
#pragma once

#include "modcount/errors.hpp"

#include <string>
#include <utility>
#include <vector>

namespace modcount {

struct Fatgraph {
    std::vector<int> vertex_perm;     // tau0
    std::vector<int> edge_perm;       // tau1
    std::vector<int> boundary_labels; // label per tau2-cycle, cycles in min-half-edge order

    int half_edge_count() const { return static_cast<int>(vertex_perm.size()); }
    int edge_count() const { return half_edge_count() / 2; }
    int vertex_count() const;
    int boundary_count() const { return static_cast<int>(boundary_labels.size()); }
    int genus() const; // from V - E + n = 2 - 2g

    // Throws std::invalid_argument when any structural invariant fails
    // (pairing not a free involution, a vertex of valency < 3, disconnected,
    // bad labels, or non-integral/negative genus).
    void validate() const;

    // tau2-cycles in min-half-edge order, each cycle listed from its minimum.
    std::vector<std::vector<int>> boundary_cycles() const;
};

struct BoundaryInfo {
    int label;
    int length_half_edges;
};

// Genus together with the labeled boundary cycles and their combinatorial
// lengths (in half-edges), in label order.
std::pair<int, std::vector<BoundaryInfo>> boundary_profile(const Fatgraph& graph);

// Order of the group of half-edge bijections commuting with tau0 and tau1
// and fixing every boundary label.
long automorphism_order(const Fatgraph& graph);

// n x E matrix: entry (i, e) = number of sides of edge e on boundary i+1.
// Every column sums to 2. Edges are ordered by their smaller half-edge.
std::vector<std::vector<long long>> incidence_matrix(const Fatgraph& graph);

struct CatalogEntry {
    Fatgraph graph;
    long aut_order;
};

struct FatgraphCatalog {
    int genus = 0;
    int boundaries = 0;
    int unlabeled_classes = 0;
    std::vector<CatalogEntry> entries; // one per labeled isomorphism class
};

// Complete catalog of labeled isomorphism classes of type (g, n).
// Requires 2 - 2g - n < 0 and 6g - 6 + 3n <= 9 (FrontierError beyond).
FatgraphCatalog enumerate_fatgraphs(int g, int n);
FatgraphCatalog enumerate_fatgraphs_serial(int g, int n); // reference implementation

// Process-wide memoized access (enumerating (2,1) or (0,5) is expensive).
const FatgraphCatalog& cached_catalog(int g, int n);

// One-line text form: `E;(0 1 2)(3 4 5);(0 3)(1 4)(2 5);1 2 3`
std::string to_text(const Fatgraph& graph);
Fatgraph fatgraph_from_text(const std::string& line);

} // namespace modcount
