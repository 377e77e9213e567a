#include "modcount/polytope.hpp"

#include "modcount/quasipoly.hpp"

#include <algorithm>
#include <numeric>

namespace modcount {

void ConstraintSystem::validate() const {
    if (rows.empty() || rows[0].empty())
        throw std::invalid_argument("ConstraintSystem: need at least one row and column");
    const size_t cols = rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ConstraintSystem: ragged matrix");
        for (long long v : r)
            if (v < 0) throw std::invalid_argument("ConstraintSystem: negative entry");
    }
    for (size_t j = 0; j < cols; ++j) {
        bool nonzero = false;
        for (const auto& r : rows) nonzero |= r[j] != 0;
        if (!nonzero) throw std::invalid_argument("ConstraintSystem: zero column");
    }
}

namespace {

// DFS over columns sorted by decreasing weight; residual-feasibility pruning.
struct CountContext {
    const ConstraintSystem* sys;
    std::vector<int> column_order;
    // covered[k][i]: some column at position >= k has a nonzero entry in row i
    std::vector<std::vector<char>> covered;
};

BigInt count_rec(const CountContext& ctx, size_t pos, std::vector<long long>& residual) {
    const int n = ctx.sys->equations();
    if (pos == ctx.column_order.size()) {
        for (long long r : residual)
            if (r != 0) return 0;
        return 1;
    }
    for (int i = 0; i < n; ++i)
        if (residual[i] != 0 && !ctx.covered[pos][i]) return 0;

    const int j = ctx.column_order[pos];
    long long hi = -1; // max value of x_j given the residuals
    for (int i = 0; i < n; ++i) {
        long long a = ctx.sys->rows[i][j];
        if (a > 0) {
            long long cap = residual[i] / a;
            if (hi < 0 || cap < hi) hi = cap;
        }
    }
    BigInt total = 0;
    for (long long x = 0; x <= hi; ++x) {
        if (x > 0)
            for (int i = 0; i < n; ++i) residual[i] -= ctx.sys->rows[i][j];
        total += count_rec(ctx, pos + 1, residual);
    }
    for (int i = 0; i < n; ++i) residual[i] += hi * ctx.sys->rows[i][j];
    return total;
}

} // namespace

BigInt count_lattice_points(const ConstraintSystem& sys, const std::vector<long long>& b,
                            bool strict) {
    sys.validate();
    const int n = sys.equations();
    const int N = sys.unknowns();
    if (static_cast<int>(b.size()) != n)
        throw std::invalid_argument("count_lattice_points: b length mismatch");
    for (long long v : b)
        if (v < 0) throw std::invalid_argument("count_lattice_points: negative b entry");

    // Strict counts substitute x = 1 + y and count nonnegative y.
    std::vector<long long> residual = b;
    if (strict) {
        for (int i = 0; i < n; ++i) {
            long long row_sum = std::accumulate(sys.rows[i].begin(), sys.rows[i].end(), 0LL);
            residual[i] -= row_sum;
            if (residual[i] < 0) return 0;
        }
    }

    CountContext ctx;
    ctx.sys = &sys;
    ctx.column_order.resize(N);
    std::iota(ctx.column_order.begin(), ctx.column_order.end(), 0);
    std::stable_sort(ctx.column_order.begin(), ctx.column_order.end(), [&](int a, int c) {
        long long wa = 0, wc = 0;
        for (int i = 0; i < n; ++i) {
            wa += sys.rows[i][a];
            wc += sys.rows[i][c];
        }
        return wa > wc;
    });
    ctx.covered.assign(N + 1, std::vector<char>(n, 0));
    for (int k = N - 1; k >= 0; --k) {
        ctx.covered[k] = ctx.covered[k + 1];
        for (int i = 0; i < n; ++i)
            if (sys.rows[i][ctx.column_order[k]] != 0) ctx.covered[k][i] = 1;
    }
    return count_rec(ctx, 0, residual);
}

namespace {

BigInt det(std::vector<std::vector<BigInt>> m) {
    // Fraction-free Bareiss determinant.
    const int n = static_cast<int>(m.size());
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

} // namespace

BigInt lattice_index(const ConstraintSystem& sys) {
    sys.validate();
    const int n = sys.equations();
    const int N = sys.unknowns();
    if (N < n) throw std::domain_error("lattice_index: rank-deficient matrix");

    // gcd of all n x n minors = product of the elementary divisors of A.
    BigInt g = 0;
    std::vector<int> pick(n);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (g == 1) return;
        if (pos == n) {
            std::vector<std::vector<BigInt>> sub(n, std::vector<BigInt>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) sub[i][j] = sys.rows[i][pick[j]];
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(det(sub)));
            return;
        }
        for (int j = start; j <= N - (n - pos); ++j) {
            pick[pos] = j;
            self(self, pos + 1, j + 1);
        }
    };
    rec(rec, 0, 0);
    if (g == 0) throw std::domain_error("lattice_index: rank-deficient matrix");
    return g;
}

Rational polytope_volume(const ConstraintSystem& sys, const std::vector<long long>& b) {
    sys.validate();
    const int n = sys.equations();
    const int N = sys.unknowns();
    if (static_cast<int>(b.size()) != n)
        throw std::invalid_argument("polytope_volume: b length mismatch");
    const int dim = N - n;
    const BigInt index = lattice_index(sys); // also checks full rank

    // Sample strict counts along dilates m*t*b and interpolate in t. Step
    // m = 2 avoids parity obstructions from odd-weight columns.
    for (long long step : {1LL, 2LL}) {
        const int points = dim + 3;
        std::vector<BigInt> counts(points);
        bool all_zero = true;
        for (int t = 1; t <= points; ++t) {
            std::vector<long long> bt(n);
            for (int i = 0; i < n; ++i) bt[i] = step * t * b[i];
            counts[t - 1] = count_lattice_points(sys, bt, true);
            all_zero &= counts[t - 1] == 0;
        }
        if (all_zero) return Rational(0); // empty polytope along the ray

        // Interpolate a degree <= dim polynomial through t = 1..dim+1 and
        // verify on the extra points; failure means quasi behaviour on this
        // residue class, so retry with the doubled step.
        std::vector<std::vector<BigInt>> mat;
        std::vector<Rational> rhs;
        for (int t = 1; t <= points; ++t) {
            std::vector<BigInt> row(dim + 1);
            BigInt p = 1;
            for (int d = 0; d <= dim; ++d) {
                row[d] = p;
                p *= t;
            }
            mat.push_back(std::move(row));
            rhs.push_back(Rational(counts[t - 1]));
        }
        LinearSolve solved = solve_exact(std::move(mat), std::move(rhs));
        if (solved.status != LinearSolve::Status::Ok) continue;

        Rational leading = solved.solution[dim];
        if (leading.is_zero())
            throw std::domain_error("polytope_volume: degenerate direction (count degree below "
                                    "polytope dimension)");
        // counts(t) = ind * V(b) * (step*t)^dim + lower order
        return leading / Rational(index) / Rational(BigInt(step)).pow(dim);
    }
    throw std::domain_error("polytope_volume: counts not polynomial on sampled dilation classes");
}

LaplaceProductForm vpf_laplace_form(const ConstraintSystem& sys) {
    sys.validate();
    LaplaceProductForm form;
    for (int j = 0; j < sys.unknowns(); ++j) {
        std::vector<long long> col(sys.equations());
        for (int i = 0; i < sys.equations(); ++i) col[i] = sys.rows[i][j];
        form.columns.push_back(std::move(col));
    }
    return form;
}

TruncatedSeries expand_laplace_form(const LaplaceProductForm& form, int order) {
    if (form.columns.empty()) throw std::invalid_argument("expand_laplace_form: no columns");
    const int n = static_cast<int>(form.columns[0].size());
    TruncatedSeries acc = TruncatedSeries::constant(n, order, Rational(1));
    for (const auto& col : form.columns) {
        // z^alpha / (1 - z^alpha) = sum_{k>=1} z^{k*alpha}, truncated
        TruncatedSeries factor(n, order);
        long long weight = std::accumulate(col.begin(), col.end(), 0LL);
        if (weight == 0) throw std::invalid_argument("expand_laplace_form: zero column");
        for (long long k = 1; k * weight <= order; ++k) {
            Exponents e(n);
            for (int i = 0; i < n; ++i) e[i] = static_cast<int>(k * col[i]);
            factor.set(e, Rational(1));
        }
        acc = acc * factor;
    }
    return acc;
}

Polynomial ehrhart_polynomial(const ConstraintSystem& sys, const std::vector<long long>& b0,
                              int T, bool check_reciprocity) {
    sys.validate();
    const int n = sys.equations();
    const int N = sys.unknowns();
    const int dim = N - n;
    if (T < dim + 2) throw std::invalid_argument("ehrhart_polynomial: T must exceed degree by 2");

    std::vector<std::vector<BigInt>> mat;
    std::vector<Rational> rhs;
    for (int k = 1; k <= T; ++k) {
        std::vector<long long> bk(n);
        for (int i = 0; i < n; ++i) bk[i] = k * b0[i];
        std::vector<BigInt> row(dim + 1);
        BigInt p = 1;
        for (int d = 0; d <= dim; ++d) {
            row[d] = p;
            p *= k;
        }
        mat.push_back(std::move(row));
        rhs.push_back(Rational(count_lattice_points(sys, bk, false)));
    }
    LinearSolve solved = solve_exact(std::move(mat), std::move(rhs));
    if (solved.status != LinearSolve::Status::Ok)
        throw std::domain_error("ehrhart_polynomial: counts not polynomial on sampled dilates");

    Polynomial p(1);
    for (int d = 0; d <= dim; ++d) p.add_term({d}, solved.solution[d]);

    // Independent verification point beyond the fit window.
    {
        std::vector<long long> bk(n);
        for (int i = 0; i < n; ++i) bk[i] = static_cast<long long>(T + 1) * b0[i];
        if (p.evaluate(std::vector<BigInt>{BigInt(T + 1)}) !=
            Rational(count_lattice_points(sys, bk, false)))
            throw std::domain_error("ehrhart_polynomial: verification at T+1 failed");
    }

    if (check_reciprocity) {
        for (int k = 1; k <= T; ++k) {
            std::vector<long long> bk(n);
            for (int i = 0; i < n; ++i) bk[i] = k * b0[i];
            Rational strict_count(count_lattice_points(sys, bk, true));
            Rational mirrored = p.evaluate(std::vector<BigInt>{BigInt(-k)});
            if (dim % 2 == 1) mirrored = -mirrored;
            if (strict_count != mirrored)
                throw std::domain_error("ehrhart_polynomial: reciprocity check failed");
        }
    }
    return p;
}

} // namespace modcount
