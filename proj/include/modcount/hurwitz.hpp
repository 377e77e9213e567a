/**
 * @file hurwitz.hpp
 * @brief Branched-cover counts via symmetric-group factorizations: the Belyi
 *        problem (profiles b over infinity, all 2s over 1, no units over 0),
 *        simple Hurwitz numbers by transitive transposition factorizations,
 *        the disconnected class-algebra trace, and ELSV evaluations.
 *
 * All searches fix one permutation in its conjugacy class and divide by its
 * centralizer order instead of scanning whole classes.
 */
#pragma once

#include "modcount/rational.hpp"

#include <string>
#include <vector>

namespace modcount {

struct Partition {
    std::vector<int> parts; // weakly decreasing, positive

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    void validate() const;
    std::string to_string() const;       // "3,1,1"
    BigInt automorphisms() const;        // prod of multiplicities!
    BigInt centralizer_order() const;    // prod parts * prod multiplicities!
};

struct BranchData {
    int degree;
    std::vector<Partition> profiles;
    void validate() const;
};

// Weighted count of connected genus-g covers of the sphere branched over
// three points: labeled cycles of lengths b over infinity, all 2s over 1,
// and (with forbid_units) no fixed points over 0. Equals the lattice count
// of type (g, n). With forbid_units = false this is the non-polynomial
// count that also allows unramified sheets over 0.
Rational belyi_count(int g, const std::vector<long long>& lengths, bool forbid_units = true);
Rational belyi_count_serial(int g, const std::vector<long long>& lengths,
                            bool forbid_units = true);

// Weighted count of connected genus-g covers with profile mu over infinity
// and transpositions at the 2g-2+len(mu)+|mu| remaining branch points.
Rational simple_hurwitz(int g, const Partition& mu);
Rational simple_hurwitz_serial(int g, const Partition& mu);

// |Aut mu| / r! times the unlabeled count; the fibre over infinity is labeled.
Rational labeled_simple_hurwitz(int g, const Partition& mu);

// Disconnected, unlabeled weighted count of factorizations of the identity
// with one factor from each profile's conjugacy class: the identity
// coefficient of the class-sum product divided by d!.
Rational class_trace(const BranchData& data);

// Exact ELSV evaluation from the stored P_{g,n} rows;
// supported (g, len(mu)): (0,2), (0,3), (0,4), (1,1), (1,2).
Rational elsv_hurwitz(int g, const Partition& mu);

} // namespace modcount
