#include "modcount/moduli.hpp"

#include "modcount/bernoulli.hpp"
#include "modcount/errors.hpp"
#include "modcount/fatgraph.hpp"
#include "modcount/json_io.hpp"
#include "modcount/polytope.hpp"
#include "modcount/series.hpp"

#include <algorithm>
#include <filesystem>
#include <mutex>
#include <numeric>

namespace modcount {

namespace {

bool stable(int g, int n) { return 2 * g - 2 + n > 0; }

void check_lengths(int n, const std::vector<long long>& b) {
    if (static_cast<int>(b.size()) != n)
        throw std::invalid_argument("length vector does not match boundary count");
    for (long long v : b)
        if (v < 1) throw std::invalid_argument("boundary lengths must be positive");
}

} // namespace

namespace {

// incidence systems of the whole catalog, built once per (g, n)
const std::vector<std::pair<ConstraintSystem, long>>& incidence_systems(int g, int n) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::vector<std::pair<ConstraintSystem, long>>> store;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(g, n);
    auto it = store.find(key);
    if (it == store.end()) {
        std::vector<std::pair<ConstraintSystem, long>> systems;
        for (const auto& entry : cached_catalog(g, n).entries)
            systems.push_back({ConstraintSystem{incidence_matrix(entry.graph)}, entry.aut_order});
        it = store.emplace(key, std::move(systems)).first;
    }
    return it->second;
}

} // namespace

Rational lattice_count_direct(int g, int n, const std::vector<long long>& b) {
    if (!stable(g, n)) throw std::invalid_argument("lattice_count_direct: unstable type");
    check_lengths(n, b);
    const auto& systems = incidence_systems(g, n); // FrontierError beyond 6g-6+3n <= 9
    long long sum = std::accumulate(b.begin(), b.end(), 0LL);
    if (sum % 2 != 0) return Rational(0); // columns sum to 2

    Rational total(0);
    for (const auto& [sys, aut] : systems) {
        BigInt cnt = count_lattice_points(sys, b, true);
        if (cnt != 0) total += Rational(cnt, BigInt(aut));
    }
    return total;
}

// ---------------------------------------------------------------------------
// recursion
// ---------------------------------------------------------------------------

namespace {

std::mutex memo_mutex;
std::map<std::tuple<int, int, std::vector<long long>>, Rational> memo;

Rational n_rec(int g, int n, std::vector<long long> b);

// N with the unstable-zero convention, for use inside the recursion.
Rational n_value(int g, int n, std::vector<long long> b) {
    if (g < 0 || n < 1 || !stable(g, n)) return Rational(0);
    return n_rec(g, n, std::move(b));
}

Rational n_rec(int g, int n, std::vector<long long> b) {
    long long sum = std::accumulate(b.begin(), b.end(), 0LL);
    if (sum % 2 != 0) return Rational(0);

    if (g == 0 && n == 3) return Rational(1);
    if (g == 1 && n == 1) {
        long long v = b[0];
        return Rational(BigInt(v) * v - 4, BigInt(48));
    }

    std::sort(b.begin(), b.end());
    auto key = std::make_tuple(g, n, b);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    Rational rhs(0);

    // Case 1: remove boundaries i and j, add one of combined length p.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<long long> rest;
            for (int t = 0; t < n; ++t)
                if (t != i && t != j) rest.push_back(b[t]);
            for (long long p = 1; p < b[i] + b[j]; ++p) {
                long long q = b[i] + b[j] - p;
                std::vector<long long> args;
                args.reserve(n - 1);
                args.push_back(p);
                args.insert(args.end(), rest.begin(), rest.end());
                Rational term = n_value(g, n - 1, std::move(args));
                if (term.is_zero()) continue;
                if (q % 2 != 0)
                    throw std::logic_error("recursion parity violated in case 1");
                rhs += Rational(BigInt(p) * q) * term;
            }
        }
    }

    // Case 2: split boundary i into p + q + r, lowering genus or splitting
    // the surface.
    Rational case2(0);
    for (int i = 0; i < n; ++i) {
        std::vector<long long> rest;
        for (int t = 0; t < n; ++t)
            if (t != i) rest.push_back(b[t]);
        const int rest_count = n - 1;
        for (long long p = 1; p + 2 <= b[i]; ++p) {
            for (long long q = 1; p + q + 1 <= b[i]; ++q) {
                long long r = b[i] - p - q;
                Rational bracket(0);

                {
                    std::vector<long long> args;
                    args.reserve(n + 1);
                    args.push_back(p);
                    args.push_back(q);
                    args.insert(args.end(), rest.begin(), rest.end());
                    bracket += n_value(g - 1, n + 1, std::move(args));
                }

                // ordered stable splittings (g1, I) | (g2, J)
                for (int g1 = 0; g1 <= g; ++g1) {
                    int g2 = g - g1;
                    for (unsigned mask = 0; mask < (1u << rest_count); ++mask) {
                        std::vector<long long> left{p}, right{q};
                        for (int t = 0; t < rest_count; ++t)
                            (mask >> t & 1u ? left : right).push_back(rest[t]);
                        const int left_n = static_cast<int>(left.size());
                        const int right_n = static_cast<int>(right.size());
                        if (!stable(g1, left_n) || !stable(g2, right_n)) continue;
                        Rational lv = n_value(g1, left_n, std::move(left));
                        if (lv.is_zero()) continue;
                        Rational rv = n_value(g2, right_n, std::move(right));
                        if (rv.is_zero()) continue;
                        bracket += lv * rv;
                    }
                }

                if (bracket.is_zero()) continue;
                if (r % 2 != 0)
                    throw std::logic_error("recursion parity violated in case 2");
                case2 += Rational(BigInt(p) * q * r) * bracket;
            }
        }
    }
    rhs += case2 / Rational(2);

    Rational value = rhs / Rational(BigInt(sum));
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::move(key), value);
    return value;
}

} // namespace

Rational lattice_count_recursive(int g, int n, const std::vector<long long>& b) {
    if (!stable(g, n)) throw std::invalid_argument("lattice_count_recursive: unstable type");
    check_lengths(n, b);
    return n_rec(g, n, b);
}

// ---------------------------------------------------------------------------
// quasi-polynomial fit
// ---------------------------------------------------------------------------

namespace {

std::mutex qp_mutex;
std::map<std::pair<int, int>, QuasiPolynomial> qp_store;
std::string cache_dir;

// weakly increasing k-tuples from `values`, smallest sums first
std::vector<std::vector<long long>> tuples_from(const std::vector<long long>& values, int k) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (size_t i = from; i < values.size(); ++i) {
            cur.push_back(values[i]);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& c) {
        return std::accumulate(a.begin(), a.end(), 0LL) < std::accumulate(c.begin(), c.end(), 0LL);
    });
    return out;
}

QuasiPolynomial fit_quasipolynomial(int g, int n) {
    const int degree = 3 * g - 3 + n;

    // Per representative parity class (first k slots odd), sample the
    // recursion on a block-sorted grid: the basis-count samples determine the
    // fit and at least three extras are verification rows inside qp_fit.
    std::vector<std::pair<std::vector<long long>, Rational>> samples;
    for (int k = 0; k <= n; k += 2) {
        const size_t need = qp_basis_size(k, n - k, degree) + 3;
        for (int span = degree + 2;; ++span) {
            if (span > degree + 12)
                throw std::logic_error("fit_quasipolynomial: sample grid exhausted");
            std::vector<long long> odd_values, even_values;
            for (int v = 0; v < span; ++v) {
                odd_values.push_back(2 * v + 1);
                even_values.push_back(2 * v + 2);
            }
            std::vector<std::pair<std::vector<long long>, Rational>> class_samples;
            for (const auto& ot : tuples_from(odd_values, k))
                for (const auto& et : tuples_from(even_values, n - k)) {
                    std::vector<long long> b = ot;
                    b.insert(b.end(), et.begin(), et.end());
                    class_samples.push_back({std::move(b), Rational(0)});
                }
            std::stable_sort(class_samples.begin(), class_samples.end(),
                             [](const auto& a, const auto& c) {
                                 return std::accumulate(a.first.begin(), a.first.end(), 0LL) <
                                        std::accumulate(c.first.begin(), c.first.end(), 0LL);
                             });
            if (class_samples.size() < need) continue;
            class_samples.resize(std::min(class_samples.size(), need + 4));
            for (auto& [b, value] : class_samples) value = lattice_count_recursive(g, n, b);
            try {
                qp_fit(class_samples, n, degree); // probe this class alone
            } catch (const std::invalid_argument&) {
                continue; // rank-deficient grid: widen
            }
            samples.insert(samples.end(), class_samples.begin(), class_samples.end());
            break;
        }
    }

    // A fit inconsistency here would falsify the quasi-polynomiality theorem
    // for these samples; qp_fit aborts loudly in that case.
    QuasiPolynomial fitted = qp_fit(samples, n, degree);

    // Extend the representative classes to all even-weight parity vectors by
    // permutation symmetry.
    QuasiPolynomial full(n);
    for (int k = 0; k <= n; k += 2) {
        ParityClass rep(n, 0);
        for (int i = 0; i < k; ++i) rep[i] = 1;
        Polynomial rep_poly = fitted.class_poly(rep);
        std::vector<int> parity(n, 0);
        std::fill(parity.begin(), parity.begin() + k, 1);
        std::sort(parity.begin(), parity.end());
        do {
            std::vector<int> odd_pos, even_pos;
            for (int i = 0; i < n; ++i) (parity[i] ? odd_pos : even_pos).push_back(i);
            std::vector<int> perm(n);
            int oi = 0, ei = 0;
            for (int i = 0; i < n; ++i) perm[i] = i < k ? odd_pos[oi++] : even_pos[ei++];
            full.set_class(parity, rep_poly.permuted(perm));
        } while (std::next_permutation(parity.begin(), parity.end()));
    }
    return full;
}

} // namespace

void set_cache_directory(const std::string& dir) {
    std::lock_guard<std::mutex> lock(qp_mutex);
    cache_dir = dir;
}

const QuasiPolynomial& lattice_count_quasipolynomial(int g, int n) {
    if (!stable(g, n))
        throw std::invalid_argument("lattice_count_quasipolynomial: unstable type");
    auto disk_path = [&](const std::string& dir) {
        return std::filesystem::path(dir) /
               ("N_g" + std::to_string(g) + "_n" + std::to_string(n) + ".json");
    };
    auto persist = [&](const QuasiPolynomial& qp) {
        if (cache_dir.empty()) return;
        auto path = disk_path(cache_dir);
        if (std::filesystem::exists(path)) return;
        std::filesystem::create_directories(cache_dir);
        save_quasipolynomial(qp, path.string());
    };
    {
        std::lock_guard<std::mutex> lock(qp_mutex);
        auto it = qp_store.find({g, n});
        if (it != qp_store.end()) {
            persist(it->second);
            return it->second;
        }
        if (!cache_dir.empty() && std::filesystem::exists(disk_path(cache_dir))) {
            QuasiPolynomial qp = load_quasipolynomial(disk_path(cache_dir).string());
            return qp_store.emplace(std::make_pair(g, n), std::move(qp)).first->second;
        }
    }
    QuasiPolynomial qp = fit_quasipolynomial(g, n);
    std::lock_guard<std::mutex> lock(qp_mutex);
    auto [it, inserted] = qp_store.emplace(std::make_pair(g, n), std::move(qp));
    persist(it->second);
    return it->second;
}

// ---------------------------------------------------------------------------
// derived quantities
// ---------------------------------------------------------------------------

Rational euler_characteristic(int g, int n, EulerMethod method) {
    if (!stable(g, n)) throw std::invalid_argument("euler_characteristic: unstable type");
    if (method == EulerMethod::Lattice) {
        return lattice_count_quasipolynomial(g, n).evaluate(std::vector<long long>(n, 0));
    }
    if (g == 0) {
        // chi(M_{0,n}) = (-1)^(n-1) (n-3)! with chi(M_{0,3}) = 1
        Rational chi(factorial(n - 3));
        return n % 2 == 0 ? -chi : chi;
    }
    Rational chi1 = zeta_neg(g);
    if (n == 1) return chi1;
    // chi(M_{g,n}) = (-1)^(n-1) (2g-3+n)!/(2g-2)! chi(M_{g,1})
    Rational factor(factorial(2 * g - 3 + n), factorial(2 * g - 2));
    if (n % 2 == 0) factor = -factor;
    return factor * chi1;
}

Polynomial kontsevich_volume(int g, int n) {
    const QuasiPolynomial& qp = lattice_count_quasipolynomial(g, n);
    Polynomial even_class = qp.class_poly(ParityClass(n, 0));
    return even_class.homogeneous_part(6 * g - 6 + 2 * n).scaled(Rational(1, 2));
}

std::map<std::vector<int>, Rational> intersection_numbers(int g, int n) {
    const QuasiPolynomial& qp = lattice_count_quasipolynomial(g, n);
    Polynomial top = qp.class_poly(ParityClass(n, 0)).homogeneous_part(6 * g - 6 + 2 * n);
    BigInt two_power = BigInt(1) << (6 * g - 6 + 2 * n - g);
    std::map<std::vector<int>, Rational> numbers;
    for (const auto& [exp, coef] : top.terms()) {
        std::vector<int> d(n);
        BigInt dfact = 1;
        for (int i = 0; i < n; ++i) {
            d[i] = exp[i] / 2;
            dfact *= factorial(d[i]);
        }
        numbers[d] = coef * Rational(two_power * dfact);
    }
    return numbers;
}

std::pair<Rational, Rational> dilaton_check(int g, int n, const std::vector<long long>& b) {
    if (!stable(g, n)) throw std::invalid_argument("dilaton_check: unstable type");
    check_lengths(n, b);
    const QuasiPolynomial& qp_next = lattice_count_quasipolynomial(g, n + 1);
    std::vector<long long> with2{2}, with0{0};
    with2.insert(with2.end(), b.begin(), b.end());
    with0.insert(with0.end(), b.begin(), b.end());
    Rational lhs = qp_next.evaluate(with2) - qp_next.evaluate(with0);
    Rational rhs = Rational(2 * g - 2 + n) * lattice_count_recursive(g, n, b);
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Harer-Zagier pipeline
// ---------------------------------------------------------------------------

HZTable hz_c_table(int nmax, int kmax) {
    if (nmax < 0 || kmax < 0) throw std::invalid_argument("hz_c_table: negative bounds");
    HZTable table;
    table.nmax = nmax;
    table.kmax = kmax;
    table.c.assign(nmax + 1, std::vector<BigInt>(kmax + 1, 0));
    for (int k = 0; k <= kmax; ++k) table.c[0][k] = k; // c(0,k) = k
    for (int n = 1; n <= nmax; ++n) {
        table.c[n][0] = 0; // c(n,0) = 0
        for (int k = 1; k <= kmax; ++k)
            table.c[n][k] = table.c[n][k - 1] + table.c[n - 1][k] + table.c[n - 1][k - 1];
    }

    // generating-function cross-check: 1 + 2 sum c(n,k) x^{n+1} = ((1+x)/(1-x))^k
    for (int k = 0; k <= kmax; ++k) {
        TruncatedSeries one_plus(1, nmax + 1), one_minus(1, nmax + 1);
        one_plus.set({0}, Rational(1));
        one_plus.set({1}, Rational(1));
        one_minus.set({0}, Rational(1));
        one_minus.set({1}, Rational(-1));
        TruncatedSeries gf = one_plus.divided_by(one_minus).pow(k);
        if (gf.coefficient({0}) != Rational(1))
            throw std::logic_error("hz_c_table: generating function constant term mismatch");
        for (int n = 0; n <= nmax; ++n)
            if (gf.coefficient({n + 1}) != Rational(2) * Rational(table.c[n][k]))
                throw std::logic_error("hz_c_table: generating function cross-check failed");
    }
    return table;
}

namespace {

// coefficients of the degree-(n+1) polynomial k -> c(n,k), by exact
// interpolation at k = 0..n+1
std::vector<Rational> c_polynomial(int n) {
    HZTable table = hz_c_table(n, n + 1);
    std::vector<std::vector<BigInt>> mat;
    std::vector<Rational> rhs;
    for (int k = 0; k <= n + 1; ++k) {
        std::vector<BigInt> row(n + 2);
        BigInt p = 1;
        for (int d = 0; d <= n + 1; ++d) {
            row[d] = p;
            p *= k;
        }
        mat.push_back(std::move(row));
        rhs.push_back(Rational(table.c[n][k]));
    }
    LinearSolve solved = solve_exact(std::move(mat), std::move(rhs));
    if (solved.status != LinearSolve::Status::Ok)
        throw std::logic_error("c_polynomial: interpolation failed");
    return solved.solution;
}

} // namespace

BigInt hz_epsilon(int g, int n) {
    if (n < 0 || g < 0 || 2 * g > n) return 0;
    std::vector<Rational> coeffs = c_polynomial(n);
    Rational eps = coeffs[n + 1 - 2 * g] * Rational(double_factorial_odd(2 * n - 1));
    if (!eps.is_integer()) throw std::logic_error("hz_epsilon: non-integral value");
    return eps.num();
}

BigInt hz_mu(int g, int n) {
    if (g < 0) throw std::invalid_argument("hz_mu: negative genus");
    if (n <= 0 || 2 * g > n) return 0;
    // epsilon_g(n) = sum_{i>=0} C(2n, i) mu_g(n - i)
    BigInt mu = hz_epsilon(g, n);
    for (int i = 1; i < n; ++i) mu -= binomial(2 * n, i) * hz_mu(g, n - i);
    return mu;
}

Rational lattice_count_g1_hz(int g, long long b) {
    if (g < 1) throw std::invalid_argument("lattice_count_g1_hz: need g >= 1");
    if (b < 2 || b % 2 != 0)
        throw std::invalid_argument("lattice_count_g1_hz: b must be even and >= 2");
    return Rational(hz_mu(g, static_cast<int>(b / 2)), BigInt(b));
}

std::map<int, Rational> binomial_basis_coefficients(int g) {
    if (g < 1) throw std::invalid_argument("binomial_basis_coefficients: need g >= 1");
    const int k_min = 2 * g, k_max = 6 * g - 3;
    std::vector<std::vector<BigInt>> mat;
    std::vector<Rational> rhs;
    // rows below m = k_min are identically zero; sample past k_max for
    // verification slack
    for (int m = 1; m <= k_max + 2; ++m) {
        std::vector<BigInt> row;
        for (int k = k_min; k <= k_max; ++k) row.push_back(binomial(m - 1, k - 1));
        mat.push_back(std::move(row));
        rhs.push_back(lattice_count_recursive(g, 1, {2LL * m}));
    }
    LinearSolve solved = solve_exact(std::move(mat), std::move(rhs));
    if (solved.status != LinearSolve::Status::Ok)
        throw std::logic_error("binomial_basis_coefficients: basis change failed");
    std::map<int, Rational> out;
    for (int k = k_min; k <= k_max; ++k) out[k] = solved.solution[k - k_min];
    return out;
}

} // namespace modcount
