#include "modcount/fatgraph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modcount {

namespace {

std::vector<int> tau2_of(const std::vector<int>& t0, const std::vector<int>& t1) {
    std::vector<int> t2(t0.size());
    for (size_t h = 0; h < t0.size(); ++h) t2[h] = t0[t1[h]];
    return t2;
}

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(perm.size(), 0);
    for (size_t h = 0; h < perm.size(); ++h) {
        if (seen[h]) continue;
        std::vector<int> cycle;
        int x = static_cast<int>(h);
        do {
            cycle.push_back(x);
            seen[x] = 1;
            x = perm[x];
        } while (x != static_cast<int>(h));
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

bool is_permutation(const std::vector<int>& p) {
    std::vector<char> hit(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

bool is_connected(const std::vector<int>& t0, const std::vector<int>& t1) {
    const int m = static_cast<int>(t0.size());
    if (m == 0) return false;
    std::vector<int> stack{0};
    std::vector<char> seen(m, 0);
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int nb : {t0[h], t1[h]})
            if (!seen[nb]) {
                seen[nb] = 1;
                ++visited;
                stack.push_back(nb);
            }
    }
    return visited == m;
}

} // namespace

int Fatgraph::vertex_count() const {
    return static_cast<int>(cycles_of(vertex_perm).size());
}

int Fatgraph::genus() const {
    int euler = vertex_count() - edge_count() + boundary_count();
    return (2 - euler) / 2;
}

std::vector<std::vector<int>> Fatgraph::boundary_cycles() const {
    return cycles_of(tau2_of(vertex_perm, edge_perm));
}

void Fatgraph::validate() const {
    const int m = half_edge_count();
    if (m == 0 || m % 2 != 0) throw std::invalid_argument("Fatgraph: need an even number of half-edges");
    if (static_cast<int>(edge_perm.size()) != m)
        throw std::invalid_argument("Fatgraph: permutation size mismatch");
    if (!is_permutation(vertex_perm) || !is_permutation(edge_perm))
        throw std::invalid_argument("Fatgraph: tau0/tau1 not permutations");
    for (int h = 0; h < m; ++h) {
        if (edge_perm[h] == h) throw std::invalid_argument("Fatgraph: tau1 has a fixed point");
        if (edge_perm[edge_perm[h]] != h) throw std::invalid_argument("Fatgraph: tau1 not an involution");
    }
    for (const auto& cycle : cycles_of(vertex_perm))
        if (cycle.size() < 3) throw std::invalid_argument("Fatgraph: vertex of valency < 3");
    if (!is_connected(vertex_perm, edge_perm)) throw std::invalid_argument("Fatgraph: not connected");

    auto cycles = boundary_cycles();
    const int n = static_cast<int>(cycles.size());
    if (static_cast<int>(boundary_labels.size()) != n)
        throw std::invalid_argument("Fatgraph: boundary label count mismatch");
    std::vector<char> used(n + 1, 0);
    for (int lab : boundary_labels) {
        if (lab < 1 || lab > n || used[lab]) throw std::invalid_argument("Fatgraph: labels not a bijection");
        used[lab] = 1;
    }
    int euler = vertex_count() - edge_count() + n;
    if ((2 - euler) % 2 != 0 || (2 - euler) < 0)
        throw std::invalid_argument("Fatgraph: corrupted structure (bad genus)");
}

std::pair<int, std::vector<BoundaryInfo>> boundary_profile(const Fatgraph& graph) {
    graph.validate();
    auto cycles = graph.boundary_cycles();
    std::vector<BoundaryInfo> info;
    for (size_t c = 0; c < cycles.size(); ++c)
        info.push_back({graph.boundary_labels[c], static_cast<int>(cycles[c].size())});
    std::sort(info.begin(), info.end(),
              [](const BoundaryInfo& a, const BoundaryInfo& b) { return a.label < b.label; });
    return {graph.genus(), info};
}

long automorphism_order(const Fatgraph& graph) {
    graph.validate();
    const int m = graph.half_edge_count();
    const auto& t0 = graph.vertex_perm;
    const auto& t1 = graph.edge_perm;

    // boundary label per half-edge
    auto cycles = graph.boundary_cycles();
    std::vector<int> label_of(m);
    for (size_t c = 0; c < cycles.size(); ++c)
        for (int h : cycles[c]) label_of[h] = graph.boundary_labels[c];

    // An automorphism is determined by the image of one half-edge: extend
    // phi(0) = s along tau0/tau1 and count the consistent label-preserving
    // extensions.
    long count = 0;
    std::vector<int> phi(m);
    std::vector<int> queue(m);
    for (int s = 0; s < m; ++s) {
        std::fill(phi.begin(), phi.end(), -1);
        phi[0] = s;
        queue[0] = 0;
        int head = 0, tail = 1;
        bool ok = true;
        while (head < tail && ok) {
            int h = queue[head++];
            const int pairs[2][2] = {{t0[h], t0[phi[h]]}, {t1[h], t1[phi[h]]}};
            for (const auto& pr : pairs) {
                int from = pr[0], to = pr[1];
                if (phi[from] < 0) {
                    phi[from] = to;
                    queue[tail++] = from;
                } else if (phi[from] != to) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        for (int h = 0; h < m && ok; ++h) ok = label_of[h] == label_of[phi[h]];
        if (ok) ++count;
    }
    return count;
}

std::vector<std::vector<long long>> incidence_matrix(const Fatgraph& graph) {
    graph.validate();
    const int m = graph.half_edge_count();
    const int n = graph.boundary_count();
    auto cycles = graph.boundary_cycles();
    std::vector<int> label_of(m);
    for (size_t c = 0; c < cycles.size(); ++c)
        for (int h : cycles[c]) label_of[h] = graph.boundary_labels[c];

    std::vector<std::vector<long long>> mat(n, std::vector<long long>(graph.edge_count(), 0));
    int e = 0;
    for (int h = 0; h < m; ++h) {
        if (h > graph.edge_perm[h]) continue; // one edge per pair
        mat[label_of[h] - 1][e] += 1;
        mat[label_of[graph.edge_perm[h]] - 1][e] += 1;
        ++e;
    }
    return mat;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

struct VectorHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Scratch for canonical encodings; one per thread.
struct CanonScratch {
    std::vector<int> cid, order, enc, best;
};

// Rooted encoding: breadth-first relabeling from `root` following tau0 and
// tau1. Isomorphic rooted graphs give equal encodings. The appended label
// track (one label per canonical half-edge) makes the labeled variant.
void rooted_encoding(const std::vector<int>& t0, const std::vector<int>& t1,
                     const std::vector<int>* half_edge_labels, int root, CanonScratch& s) {
    const int m = static_cast<int>(t0.size());
    s.cid.assign(m, -1);
    s.order.resize(m);
    s.cid[root] = 0;
    s.order[0] = root;
    int count = 1;
    for (int i = 0; i < m; ++i) {
        int h = s.order[i];
        for (int nb : {t0[h], t1[h]})
            if (s.cid[nb] < 0) {
                s.cid[nb] = count;
                s.order[count++] = nb;
            }
    }
    s.enc.clear();
    for (int i = 0; i < m; ++i) {
        s.enc.push_back(s.cid[t0[s.order[i]]]);
        s.enc.push_back(s.cid[t1[s.order[i]]]);
    }
    if (half_edge_labels)
        for (int i = 0; i < m; ++i) s.enc.push_back((*half_edge_labels)[s.order[i]]);
}

// Minimal encoding over all roots; `aut_order` receives its multiplicity
// (automorphisms act freely on half-edges, so multiplicity = |Aut|).
// `min_root_cid` receives the relabeling map of the minimizing root.
std::vector<int> canonical_encoding(const std::vector<int>& t0, const std::vector<int>& t1,
                                    const std::vector<int>* half_edge_labels, long& aut_order,
                                    std::vector<int>& min_root_cid, CanonScratch& s) {
    const int m = static_cast<int>(t0.size());
    long multiplicity = 0;
    for (int root = 0; root < m; ++root) {
        rooted_encoding(t0, t1, half_edge_labels, root, s);
        if (root == 0 || s.enc < s.best) {
            s.best = s.enc;
            min_root_cid = s.cid;
            multiplicity = 1;
        } else if (s.enc == s.best) {
            ++multiplicity;
        }
    }
    aut_order = multiplicity;
    return s.best;
}

// All fixed-point-free involutions extending `partner` (entries -1 free).
template <typename Fn>
void complete_matchings(std::vector<int>& partner, Fn&& fn) {
    int first = -1;
    const int m = static_cast<int>(partner.size());
    for (int i = 0; i < m; ++i)
        if (partner[i] < 0) {
            first = i;
            break;
        }
    if (first < 0) {
        fn(partner);
        return;
    }
    for (int j = first + 1; j < m; ++j) {
        if (partner[j] >= 0) continue;
        partner[first] = j;
        partner[j] = first;
        complete_matchings(partner, fn);
        partner[first] = -1;
        partner[j] = -1;
    }
}

// Partitions of `total` into parts >= 3, descending; these are the vertex
// valence multisets.
std::vector<std::vector<int>> valence_multisets(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int slots, int max_part) -> void {
        if (slots == 0) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining - 3 * (slots - 1), max_part); p >= 3; --p) {
            cur.push_back(p);
            self(self, remaining - p, slots - 1, p);
            cur.pop_back();
        }
    };
    rec(rec, total, parts, total);
    return out;
}

std::vector<int> canonical_tau0(const std::vector<int>& valences) {
    int m = std::accumulate(valences.begin(), valences.end(), 0);
    std::vector<int> t0(m);
    int start = 0;
    for (int v : valences) {
        for (int i = 0; i < v; ++i) t0[start + i] = start + (i + 1) % v;
        start += v;
    }
    return t0;
}

struct UnlabeledClass {
    std::vector<int> t0, t1; // canonical relabeling
    long aut_order;
};

using UnlabeledMap = std::unordered_map<std::vector<int>, UnlabeledClass, VectorHash>;

// Candidate filter + canonicalization for one complete matching.
void consider_matching(const std::vector<int>& t0, const std::vector<int>& t1, int n,
                       UnlabeledMap& found, CanonScratch& scratch) {
    const int m = static_cast<int>(t0.size());

    // boundary count
    int cycles = 0;
    static thread_local std::vector<char> seen;
    seen.assign(m, 0);
    for (int h = 0; h < m; ++h) {
        if (seen[h]) continue;
        ++cycles;
        if (cycles > n) return;
        int x = h;
        do {
            seen[x] = 1;
            x = t0[t1[x]];
        } while (x != h);
    }
    if (cycles != n) return;
    if (!is_connected(t0, t1)) return;

    long aut = 0;
    std::vector<int> cid;
    std::vector<int> key = canonical_encoding(t0, t1, nullptr, aut, cid, scratch);
    auto it = found.find(key);
    if (it != found.end()) return;

    UnlabeledClass cls;
    cls.aut_order = aut;
    cls.t0.resize(m);
    cls.t1.resize(m);
    for (int h = 0; h < m; ++h) {
        cls.t0[cid[h]] = cid[t0[h]];
        cls.t1[cid[h]] = cid[t1[h]];
    }
    found.emplace(std::move(key), std::move(cls));
}

std::vector<UnlabeledClass> enumerate_unlabeled(int g, int n, bool parallel) {
    const int e_max = 6 * g - 6 + 3 * n;
    const int e_min = 2 * g - 1 + n;
    UnlabeledMap all;

    for (int E = e_min; E <= e_max; ++E) {
        const int V = E + 2 - 2 * g - n;
        if (V < 1 || 2 * E < 3 * V) continue;
        for (const auto& valences : valence_multisets(2 * E, V)) {
            const std::vector<int> t0 = canonical_tau0(valences);
            const int m = 2 * E;

            // Chunk the involution scan by the first two matched pairs.
            std::vector<std::vector<int>> chunks;
            {
                std::vector<int> partner(m, -1);
                for (int j = 1; j < m; ++j) {
                    partner[0] = j;
                    partner[j] = 0;
                    int a = j == 1 ? 2 : 1;
                    if (m == 2) {
                        chunks.push_back(partner);
                    } else {
                        for (int b = a + 1; b < m; ++b) {
                            if (partner[b] >= 0 || b == a) continue;
                            partner[a] = b;
                            partner[b] = a;
                            chunks.push_back(partner);
                            partner[a] = -1;
                            partner[b] = -1;
                        }
                    }
                    partner[0] = -1;
                    partner[j] = -1;
                }
            }

            const int num_chunks = static_cast<int>(chunks.size());
            std::vector<UnlabeledMap> partial(num_chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
            for (int c = 0; c < num_chunks; ++c) {
                CanonScratch scratch;
                std::vector<int> partner = chunks[c];
                complete_matchings(partner, [&](const std::vector<int>& t1) {
                    consider_matching(t0, t1, n, partial[c], scratch);
                });
            }
            for (auto& part : partial)
                for (auto& [key, cls] : part) all.emplace(std::move(key), std::move(cls));
        }
    }

    std::vector<UnlabeledClass> out;
    for (auto& [key, cls] : all) out.push_back(std::move(cls));
    std::sort(out.begin(), out.end(), [](const UnlabeledClass& a, const UnlabeledClass& b) {
        if (a.t0.size() != b.t0.size()) return a.t0.size() < b.t0.size();
        if (a.t0 != b.t0) return a.t0 < b.t0;
        return a.t1 < b.t1;
    });
    return out;
}

FatgraphCatalog enumerate_impl(int g, int n, bool parallel) {
    if (g < 0 || n < 1) throw std::invalid_argument("enumerate_fatgraphs: need g >= 0, n >= 1");
    if (2 - 2 * g - n >= 0)
        throw std::invalid_argument("enumerate_fatgraphs: unstable type (2-2g-n >= 0)");
    if (6 * g - 6 + 3 * n > 9)
        throw FrontierError("enumerate_fatgraphs: 6g-6+3n > 9 is beyond the supported frontier");

    FatgraphCatalog catalog;
    catalog.genus = g;
    catalog.boundaries = n;

    CanonScratch scratch;
    const auto unlabeled = enumerate_unlabeled(g, n, parallel);
    catalog.unlabeled_classes = static_cast<int>(unlabeled.size());
    for (const auto& cls : unlabeled) {
        const int m = static_cast<int>(cls.t0.size());
        auto cycles = cycles_of(tau2_of(cls.t0, cls.t1));
        std::vector<int> cycle_of(m);
        for (size_t c = 0; c < cycles.size(); ++c)
            for (int h : cycles[c]) cycle_of[h] = static_cast<int>(c);

        std::unordered_map<std::vector<int>, CatalogEntry, VectorHash> labeled;
        std::vector<int> labels(n);
        std::iota(labels.begin(), labels.end(), 1);
        do {
            std::vector<int> half_edge_labels(m);
            for (int h = 0; h < m; ++h) half_edge_labels[h] = labels[cycle_of[h]];
            long aut = 0;
            std::vector<int> cid;
            std::vector<int> key =
                canonical_encoding(cls.t0, cls.t1, &half_edge_labels, aut, cid, scratch);
            if (labeled.count(key)) continue;

            CatalogEntry entry;
            entry.aut_order = aut;
            entry.graph.vertex_perm.resize(m);
            entry.graph.edge_perm.resize(m);
            std::vector<int> relabeled_half_edge_labels(m);
            for (int h = 0; h < m; ++h) {
                entry.graph.vertex_perm[cid[h]] = cid[cls.t0[h]];
                entry.graph.edge_perm[cid[h]] = cid[cls.t1[h]];
                relabeled_half_edge_labels[cid[h]] = half_edge_labels[h];
            }
            for (const auto& cycle : cycles_of(tau2_of(entry.graph.vertex_perm, entry.graph.edge_perm)))
                entry.graph.boundary_labels.push_back(relabeled_half_edge_labels[cycle[0]]);
            labeled.emplace(std::move(key), std::move(entry));
        } while (std::next_permutation(labels.begin(), labels.end()));

        for (auto& [key, entry] : labeled) catalog.entries.push_back(std::move(entry));
    }

    std::sort(catalog.entries.begin(), catalog.entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) {
                  if (a.graph.half_edge_count() != b.graph.half_edge_count())
                      return a.graph.half_edge_count() < b.graph.half_edge_count();
                  if (a.graph.vertex_perm != b.graph.vertex_perm)
                      return a.graph.vertex_perm < b.graph.vertex_perm;
                  if (a.graph.edge_perm != b.graph.edge_perm) return a.graph.edge_perm < b.graph.edge_perm;
                  return a.graph.boundary_labels < b.graph.boundary_labels;
              });
    return catalog;
}

} // namespace

FatgraphCatalog enumerate_fatgraphs(int g, int n) { return enumerate_impl(g, n, true); }
FatgraphCatalog enumerate_fatgraphs_serial(int g, int n) { return enumerate_impl(g, n, false); }

const FatgraphCatalog& cached_catalog(int g, int n) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, FatgraphCatalog> store;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(g, n);
    auto it = store.find(key);
    if (it == store.end()) it = store.emplace(key, enumerate_fatgraphs(g, n)).first;
    return it->second;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

std::string to_text(const Fatgraph& graph) {
    std::ostringstream out;
    out << graph.edge_count() << ";";
    for (const auto& cycle : cycles_of(graph.vertex_perm)) {
        out << "(";
        for (size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i];
        out << ")";
    }
    out << ";";
    for (int h = 0; h < graph.half_edge_count(); ++h)
        if (h < graph.edge_perm[h]) out << "(" << h << " " << graph.edge_perm[h] << ")";
    out << ";";
    for (size_t c = 0; c < graph.boundary_labels.size(); ++c)
        out << (c ? " " : "") << graph.boundary_labels[c];
    return out.str();
}

namespace {

std::vector<std::vector<int>> parse_cycles(const std::string& text) {
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("fatgraph_from_text: expected '('");
        size_t close = text.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("fatgraph_from_text: unbalanced cycle");
        std::istringstream in(text.substr(pos + 1, close - pos - 1));
        std::vector<int> cycle;
        int v;
        while (in >> v) cycle.push_back(v);
        if (cycle.empty()) throw std::invalid_argument("fatgraph_from_text: empty cycle");
        cycles.push_back(std::move(cycle));
        pos = close + 1;
    }
    return cycles;
}

} // namespace

Fatgraph fatgraph_from_text(const std::string& line) {
    std::vector<std::string> fields;
    size_t start = 0;
    for (size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ';') {
            fields.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    if (fields.size() != 4) throw std::invalid_argument("fatgraph_from_text: expected 4 ';'-fields");

    int edges = 0;
    try {
        edges = std::stoi(fields[0]);
    } catch (const std::exception&) {
        throw std::invalid_argument("fatgraph_from_text: bad edge count");
    }
    const int m = 2 * edges;

    Fatgraph graph;
    graph.vertex_perm.assign(m, -1);
    graph.edge_perm.assign(m, -1);
    for (const auto& cycle : parse_cycles(fields[1]))
        for (size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
            if (from < 0 || from >= m || graph.vertex_perm[from] != -1)
                throw std::invalid_argument("fatgraph_from_text: bad tau0 cycles");
            graph.vertex_perm[from] = to;
        }
    for (const auto& pair : parse_cycles(fields[2])) {
        if (pair.size() != 2) throw std::invalid_argument("fatgraph_from_text: tau1 must pair half-edges");
        int a = pair[0], b = pair[1];
        if (a < 0 || a >= m || b < 0 || b >= m || graph.edge_perm[a] != -1 || graph.edge_perm[b] != -1)
            throw std::invalid_argument("fatgraph_from_text: bad tau1 pairs");
        graph.edge_perm[a] = b;
        graph.edge_perm[b] = a;
    }
    {
        std::istringstream in(fields[3]);
        int lab;
        while (in >> lab) graph.boundary_labels.push_back(lab);
    }
    for (int h = 0; h < m; ++h)
        if (graph.vertex_perm[h] < 0 || graph.edge_perm[h] < 0)
            throw std::invalid_argument("fatgraph_from_text: half-edge not covered");
    graph.validate();
    return graph;
}

} // namespace modcount
