#include "modcount/hurwitz.hpp"

#include "modcount/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modcount {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

void Partition::validate() const {
    if (parts.empty()) throw std::invalid_argument("Partition: empty");
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("Partition: nonpositive part");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

std::string Partition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s;
}

BigInt Partition::automorphisms() const {
    BigInt a = 1;
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        a *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return a;
}

BigInt Partition::centralizer_order() const {
    BigInt z = automorphisms();
    for (int p : parts) z *= p;
    return z;
}

void BranchData::validate() const {
    if (degree < 1) throw std::invalid_argument("BranchData: degree must be positive");
    if (profiles.empty()) throw std::invalid_argument("BranchData: no profiles");
    for (const auto& p : profiles) {
        p.validate();
        if (p.size() != degree)
            throw std::invalid_argument("BranchData: profile " + p.to_string() +
                                        " does not partition the degree");
    }
}

namespace {

int count_cycles(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int cycles = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        int x = static_cast<int>(i);
        do {
            seen[x] = 1;
            x = perm[x];
        } while (x != static_cast<int>(i));
    }
    return cycles;
}

// union-find over {0..d-1}
struct DisjointSet {
    std::vector<int> parent;
    int components;
    explicit DisjointSet(int d) : parent(d), components(d) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
};

bool transitive_pair(const std::vector<int>& a, const std::vector<int>& b) {
    DisjointSet ds(static_cast<int>(a.size()));
    for (int x = 0; x < static_cast<int>(a.size()); ++x) {
        ds.unite(x, a[x]);
        ds.unite(x, b[x]);
    }
    return ds.components == 1;
}

// Count matchings extending `partner` that pass the Belyi acceptance test.
long long belyi_complete(const std::vector<int>& sigma3, std::vector<int>& partner,
                         int target_sigma1_cycles, bool forbid_units) {
    const int d = static_cast<int>(partner.size());
    int first = -1;
    for (int i = 0; i < d; ++i)
        if (partner[i] < 0) {
            first = i;
            break;
        }
    if (first < 0) {
        // pi = sigma2 . sigma3 ; sigma1 = pi^{-1} has the same cycles/fixed points
        static thread_local std::vector<int> pi;
        pi.resize(d);
        for (int x = 0; x < d; ++x) pi[x] = partner[sigma3[x]];
        if (forbid_units)
            for (int x = 0; x < d; ++x)
                if (pi[x] == x) return 0;
        if (count_cycles(pi) != target_sigma1_cycles) return 0;
        if (!transitive_pair(partner, sigma3)) return 0;
        return 1;
    }
    long long total = 0;
    for (int j = first + 1; j < d; ++j) {
        if (partner[j] >= 0) continue;
        partner[first] = j;
        partner[j] = first;
        total += belyi_complete(sigma3, partner, target_sigma1_cycles, forbid_units);
        partner[first] = -1;
        partner[j] = -1;
    }
    return total;
}

Rational belyi_impl(int g, const std::vector<long long>& lengths, bool forbid_units,
                    bool parallel) {
    if (g < 0) throw std::invalid_argument("belyi_count: negative genus");
    if (lengths.empty()) throw std::invalid_argument("belyi_count: empty length vector");
    long long d = 0;
    for (long long b : lengths) {
        if (b < 1) throw std::invalid_argument("belyi_count: lengths must be positive");
        d += b;
    }
    if (d % 2 != 0) return Rational(0); // no all-2s profile over 1
    if (d > 12) throw FrontierError("belyi_count: degree above brute-force frontier (12)");

    const int n = static_cast<int>(lengths.size());
    // genus condition: cycles(s1) + cycles(s2) + cycles(s3) - d = 2 - 2g
    const int target_sigma1_cycles = static_cast<int>(2 - 2 * g - n - d / 2 + d);
    if (target_sigma1_cycles < 1) return Rational(0);

    // canonical sigma3: consecutive cycles of the labeled lengths
    std::vector<int> sigma3(d);
    int start = 0;
    for (long long b : lengths) {
        for (int i = 0; i < b; ++i) sigma3[start + i] = start + static_cast<int>((i + 1) % b);
        start += static_cast<int>(b);
    }

    // chunk by the partner of point 0
    long long accepted = 0;
    const int dd = static_cast<int>(d);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : accepted) if (parallel)
#endif
    for (int j = 1; j < dd; ++j) {
        std::vector<int> partner(dd, -1);
        partner[0] = j;
        partner[j] = 0;
        accepted += belyi_complete(sigma3, partner, target_sigma1_cycles, forbid_units);
    }

    BigInt centralizer = 1; // label-preserving centralizer of sigma3
    for (long long b : lengths) centralizer *= b;
    return Rational(BigInt(accepted), centralizer);
}

} // namespace

Rational belyi_count(int g, const std::vector<long long>& lengths, bool forbid_units) {
    return belyi_impl(g, lengths, forbid_units, true);
}
Rational belyi_count_serial(int g, const std::vector<long long>& lengths, bool forbid_units) {
    return belyi_impl(g, lengths, forbid_units, false);
}

namespace {

// DFS over r-tuples of transpositions; `current` is the running product with
// each chosen transposition composed on the right. Prunes on the
// transposition distance to sigma (d - cycles), its parity, and the number
// of components still to connect.
long long hurwitz_dfs(const std::vector<std::pair<int, int>>& transpositions,
                      std::vector<int>& current, const std::vector<int>& sigma, int remaining,
                      const DisjointSet& links) {
    const int d = static_cast<int>(current.size());
    static thread_local std::vector<int> rest, inv;
    inv.resize(d);
    rest.resize(d);
    for (int x = 0; x < d; ++x) inv[current[x]] = x;
    for (int x = 0; x < d; ++x) rest[x] = inv[sigma[x]]; // current . rest = sigma
    int needed = d - count_cycles(rest);
    if (needed > remaining || (remaining - needed) % 2 != 0) return 0;
    if (links.components - 1 > remaining) return 0;
    if (remaining == 0) return links.components == 1 ? 1 : 0; // rest = id here

    long long total = 0;
    for (const auto& [a, b] : transpositions) {
        std::swap(current[a], current[b]); // compose (a b) on the right
        DisjointSet next = links;
        next.unite(a, b);
        total += hurwitz_dfs(transpositions, current, sigma, remaining - 1, next);
        std::swap(current[a], current[b]);
    }
    return total;
}

Rational simple_hurwitz_impl(int g, const Partition& mu, bool parallel) {
    mu.validate();
    if (g < 0) throw std::invalid_argument("simple_hurwitz: negative genus");
    const int d = mu.size();
    const int n = mu.length();
    if (d > 6) throw FrontierError("simple_hurwitz: |mu| above brute-force frontier (6)");
    const int r = 2 * g - 2 + n + d;
    if (r < 0) return Rational(0);

    std::vector<int> sigma(d);
    int start = 0;
    for (int p : mu.parts) {
        for (int i = 0; i < p; ++i) sigma[start + i] = start + (i + 1) % p;
        start += p;
    }

    std::vector<std::pair<int, int>> transpositions;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) transpositions.push_back({a, b});

    long long count = 0;
    if (r == 0 || !parallel || transpositions.empty()) {
        std::vector<int> current(d);
        std::iota(current.begin(), current.end(), 0);
        count = hurwitz_dfs(transpositions, current, sigma, r, DisjointSet(d));
    } else {
        const int branches = static_cast<int>(transpositions.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
#endif
        for (int t = 0; t < branches; ++t) {
            std::vector<int> current(d);
            std::iota(current.begin(), current.end(), 0);
            auto [a, b] = transpositions[t];
            std::swap(current[a], current[b]);
            DisjointSet links(d);
            links.unite(a, b);
            count += hurwitz_dfs(transpositions, current, sigma, r - 1, links);
        }
    }
    return Rational(BigInt(count), mu.centralizer_order());
}

} // namespace

Rational simple_hurwitz(int g, const Partition& mu) { return simple_hurwitz_impl(g, mu, true); }

Rational simple_hurwitz_serial(int g, const Partition& mu) {
    return simple_hurwitz_impl(g, mu, false);
}

Rational labeled_simple_hurwitz(int g, const Partition& mu) {
    const int r = 2 * g - 2 + mu.length() + mu.size();
    if (r < 0) return Rational(0);
    return simple_hurwitz(g, mu) * Rational(mu.automorphisms(), factorial(r));
}

// ---------------------------------------------------------------------------
// class trace
// ---------------------------------------------------------------------------

namespace {

// permutations of S_d by Lehmer rank
int perm_rank(const std::vector<int>& p) {
    const int d = static_cast<int>(p.size());
    int rank = 0;
    for (int i = 0; i < d; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < d; ++j) smaller += p[j] < p[i];
        rank = rank * (d - i) + smaller;
    }
    return rank;
}

std::vector<int> cycle_type(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    std::vector<int> type;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0, x = static_cast<int>(i);
        do {
            seen[x] = 1;
            ++len;
            x = p[x];
        } while (x != static_cast<int>(i));
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

} // namespace

Rational class_trace(const BranchData& data) {
    data.validate();
    const int d = data.degree;
    if (d > 8) throw FrontierError("class_trace: degree above frontier (8)");

    // all permutations of S_d, indexed by Lehmer rank
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(d);
        std::iota(p.begin(), p.end(), 0);
        std::vector<std::vector<int>> sorted;
        do sorted.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        perms.resize(sorted.size());
        for (auto& q : sorted) perms[perm_rank(q)] = q;
    }
    const int order = static_cast<int>(perms.size());

    // members of each class; largest class is folded at the end via a
    // membership test instead of a convolution
    std::vector<std::vector<int>> class_members(data.profiles.size());
    for (size_t c = 0; c < data.profiles.size(); ++c) {
        std::vector<int> want = data.profiles[c].parts;
        for (int i = 0; i < order; ++i)
            if (cycle_type(perms[i]) == want) class_members[c].push_back(i);
    }
    std::vector<size_t> by_size(data.profiles.size());
    std::iota(by_size.begin(), by_size.end(), 0);
    std::sort(by_size.begin(), by_size.end(), [&](size_t a, size_t b) {
        return class_members[a].size() < class_members[b].size();
    });

    // distribution counts fit in unsigned __int128 for d <= 8
    std::vector<unsigned __int128> dist(order, 0);
    {
        std::vector<int> id(d);
        std::iota(id.begin(), id.end(), 0);
        dist[perm_rank(id)] = 1;
    }
    std::vector<unsigned __int128> next(order);
    std::vector<int> composed(d);
    for (size_t k = 0; k + 1 < by_size.size(); ++k) {
        std::fill(next.begin(), next.end(), 0);
        for (int gidx = 0; gidx < order; ++gidx) {
            if (dist[gidx] == 0) continue;
            for (int cidx : class_members[by_size[k]]) {
                const auto& gp = perms[gidx];
                const auto& cp = perms[cidx];
                for (int x = 0; x < d; ++x) composed[x] = gp[cp[x]];
                next[perm_rank(composed)] += dist[gidx];
            }
        }
        dist.swap(next);
    }

    // coefficient of the identity: pair dist elements with inverses in the
    // last (largest) class
    const std::vector<int>& want = data.profiles[by_size.back()].parts;
    unsigned __int128 total = 0;
    for (int gidx = 0; gidx < order; ++gidx) {
        if (dist[gidx] == 0) continue;
        if (cycle_type(perms[gidx]) == want) total += dist[gidx]; // type(g) == type(g^{-1})
    }

    BigInt numerator = 0;
    {
        // assemble BigInt from the 128-bit accumulator
        unsigned long long lo = static_cast<unsigned long long>(total);
        unsigned long long hi = static_cast<unsigned long long>(total >> 64);
        numerator = BigInt(hi);
        numerator <<= 64;
        numerator += lo;
    }
    return Rational(numerator, factorial(d));
}

// ---------------------------------------------------------------------------
// ELSV
// ---------------------------------------------------------------------------

Rational elsv_hurwitz(int g, const Partition& mu) {
    mu.validate();
    const int n = mu.length();
    const int d = mu.size();
    const int r = 2 * g - 2 + n + d;
    if (r < 0) throw std::invalid_argument("elsv_hurwitz: negative branch point count");

    std::vector<Rational> m;
    for (int p : mu.parts) m.push_back(Rational(p));

    Rational P;
    if (g == 0 && n == 2) {
        P = Rational(1) / Rational(d); // unstable row; matches the factorization oracle
    } else if (g == 0 && n == 3) {
        P = Rational(1);
    } else if (g == 0 && n == 4) {
        P = m[0] + m[1] + m[2] + m[3];
    } else if (g == 1 && n == 1) {
        P = (m[0] - Rational(1)) / Rational(24);
    } else if (g == 1 && n == 2) {
        P = (m[0] * m[0] + m[0] * m[1] + m[1] * m[1] - m[0] - m[1]) / Rational(24);
    } else {
        throw FrontierError("elsv_hurwitz: unsupported (g, n) row");
    }

    Rational h = Rational(factorial(r), mu.automorphisms());
    for (int p : mu.parts) {
        BigInt pw = 1;
        for (int i = 0; i < p; ++i) pw *= p;
        h *= Rational(pw, factorial(p));
    }
    return h * P;
}

} // namespace modcount
