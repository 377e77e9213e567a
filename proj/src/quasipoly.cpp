#include "modcount/quasipoly.hpp"

#include <algorithm>
#include <map>

namespace modcount {

LinearSolve solve_exact(std::vector<std::vector<BigInt>> matrix, std::vector<Rational> rhs) {
    const int rows = static_cast<int>(matrix.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(matrix[0].size());
    if (static_cast<int>(rhs.size()) != rows)
        throw std::invalid_argument("solve_exact: rhs length mismatch");
    if (rows < cols) return {LinearSolve::Status::Underdetermined, {}};

    // Clear rhs denominators so the whole augmented matrix is integral.
    BigInt scale = 1;
    for (const auto& r : rhs) scale = scale / boost::multiprecision::gcd(scale, r.den()) * r.den();
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) a[i][j] = matrix[i][j];
        a[i][cols] = rhs[i].num() * (scale / rhs[i].den());
    }

    // Fraction-free Bareiss elimination.
    BigInt prev = 1;
    for (int k = 0; k < cols; ++k) {
        int pivot = -1;
        for (int i = k; i < rows; ++i)
            if (a[i][k] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return {LinearSolve::Status::Underdetermined, {}};
        std::swap(a[k], a[pivot]);
        for (int i = k + 1; i < rows; ++i) {
            for (int j = k + 1; j <= cols; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    for (int i = cols; i < rows; ++i)
        if (a[i][cols] != 0) return {LinearSolve::Status::Inconsistent, {}};

    std::vector<Rational> x(cols);
    for (int k = cols - 1; k >= 0; --k) {
        Rational acc(a[k][cols]);
        for (int j = k + 1; j < cols; ++j) acc -= Rational(a[k][j]) * x[j];
        x[k] = acc / Rational(a[k][k]);
    }
    for (auto& v : x) v /= Rational(scale);

    // The eliminated system can silently drop dependent rows; check all
    // original equations.
    for (int i = 0; i < rows; ++i) {
        Rational acc(0);
        for (int j = 0; j < cols; ++j) acc += Rational(matrix[i][j]) * x[j];
        if (acc != rhs[i]) return {LinearSolve::Status::Inconsistent, {}};
    }
    return {LinearSolve::Status::Ok, std::move(x)};
}

namespace {

// Partitions of size <= max_size into at most max_parts parts, descending.
std::vector<std::vector<int>> partitions_up_to(int max_size, int max_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, max_size, max_size);
    return out;
}

// Distinct arrangements of a partition padded with zeros to width slots.
std::vector<std::vector<int>> arrangements(const std::vector<int>& partition, int slots) {
    std::vector<int> padded(slots, 0);
    std::copy(partition.begin(), partition.end(), padded.begin());
    std::sort(padded.begin(), padded.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(padded);
    } while (std::next_permutation(padded.begin(), padded.end()));
    return out;
}

struct BasisElement {
    std::vector<std::vector<int>> odd_arrangements;  // exponents (in squares) on odd slots
    std::vector<std::vector<int>> even_arrangements; // exponents (in squares) on even slots
};

} // namespace

size_t qp_basis_size(int odd_slots, int even_slots, int max_degree_in_squares) {
    size_t count = 0;
    for (const auto& lam : partitions_up_to(max_degree_in_squares, odd_slots)) {
        int lam_size = 0;
        for (int p : lam) lam_size += p;
        count += partitions_up_to(max_degree_in_squares - lam_size, even_slots).size();
    }
    return count;
}

QuasiPolynomial qp_fit(const std::vector<std::pair<std::vector<long long>, Rational>>& samples,
                       int n, int max_degree_in_squares) {
    if (n < 1) throw std::invalid_argument("qp_fit: need n >= 1");
    std::map<ParityClass, std::vector<std::pair<std::vector<long long>, Rational>>> by_class;
    for (const auto& [b, value] : samples) {
        if (static_cast<int>(b.size()) != n)
            throw std::invalid_argument("qp_fit: sample length mismatch");
        ParityClass parity(n);
        for (int i = 0; i < n; ++i) {
            if (b[i] < 0) throw std::invalid_argument("qp_fit: negative sample entry");
            parity[i] = static_cast<int>(b[i] & 1);
        }
        by_class[parity].push_back({b, value});
    }

    QuasiPolynomial result(n);
    for (const auto& [parity, class_samples] : by_class) {
        std::vector<int> odd_slots, even_slots;
        for (int i = 0; i < n; ++i) (parity[i] ? odd_slots : even_slots).push_back(i);

        // Monomial-symmetric basis in the squares, block-symmetric.
        std::vector<BasisElement> basis;
        for (const auto& lam : partitions_up_to(max_degree_in_squares,
                                                static_cast<int>(odd_slots.size()))) {
            int lam_size = 0;
            for (int p : lam) lam_size += p;
            for (const auto& mu : partitions_up_to(max_degree_in_squares - lam_size,
                                                   static_cast<int>(even_slots.size()))) {
                BasisElement el;
                el.odd_arrangements = arrangements(lam, static_cast<int>(odd_slots.size()));
                el.even_arrangements = arrangements(mu, static_cast<int>(even_slots.size()));
                basis.push_back(std::move(el));
            }
        }

        if (class_samples.size() < basis.size())
            throw std::invalid_argument("qp_fit: underdetermined (need " +
                                        std::to_string(basis.size()) + " samples per class, got " +
                                        std::to_string(class_samples.size()) + ")");

        std::vector<std::vector<BigInt>> mat;
        std::vector<Rational> rhs;
        for (const auto& [b, value] : class_samples) {
            std::vector<BigInt> sq(n);
            for (int i = 0; i < n; ++i) sq[i] = BigInt(b[i]) * b[i];
            std::vector<BigInt> row;
            for (const auto& el : basis) {
                BigInt odd_sum = 0, even_sum = 0;
                for (const auto& arr : el.odd_arrangements) {
                    BigInt m = 1;
                    for (size_t i = 0; i < arr.size(); ++i)
                        for (int k = 0; k < arr[i]; ++k) m *= sq[odd_slots[i]];
                    odd_sum += m;
                }
                for (const auto& arr : el.even_arrangements) {
                    BigInt m = 1;
                    for (size_t i = 0; i < arr.size(); ++i)
                        for (int k = 0; k < arr[i]; ++k) m *= sq[even_slots[i]];
                    even_sum += m;
                }
                row.push_back(odd_sum * even_sum);
            }
            mat.push_back(std::move(row));
            rhs.push_back(value);
        }

        LinearSolve solved = solve_exact(std::move(mat), std::move(rhs));
        if (solved.status == LinearSolve::Status::Underdetermined)
            throw std::invalid_argument("qp_fit: underdetermined sample set");
        if (solved.status == LinearSolve::Status::Inconsistent)
            throw std::domain_error("qp_fit: inconsistent samples (no quasi-polynomial of the "
                                    "stated degree fits)");

        Polynomial poly(n);
        for (size_t k = 0; k < basis.size(); ++k) {
            if (solved.solution[k].is_zero()) continue;
            for (const auto& oa : basis[k].odd_arrangements) {
                for (const auto& ea : basis[k].even_arrangements) {
                    Exponents exp(n, 0);
                    for (size_t i = 0; i < oa.size(); ++i) exp[odd_slots[i]] = 2 * oa[i];
                    for (size_t i = 0; i < ea.size(); ++i) exp[even_slots[i]] = 2 * ea[i];
                    poly.add_term(exp, solved.solution[k]);
                }
            }
        }
        result.set_class(parity, poly);
    }
    return result;
}

} // namespace modcount
