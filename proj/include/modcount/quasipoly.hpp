/**
 * @file quasipoly.hpp
 * @brief Quasi-polynomials over parity cosets of 2Z^n, and exact interpolation.
 *
 * A quasi-polynomial stores one polynomial per parity class (vector in
 * {0,1}^n); classes that map to the zero polynomial are omitted. Evaluation
 * selects the class of the argument's parities.
 */
#pragma once

#include "modcount/polynomial.hpp"

#include <map>
#include <utility>
#include <vector>

namespace modcount {

using ParityClass = std::vector<int>; // entries 0 (even) / 1 (odd)

class QuasiPolynomial {
    int vars_;
    std::map<ParityClass, Polynomial> classes_; // zero classes omitted

public:
    explicit QuasiPolynomial(int vars = 0) : vars_(vars) {}

    int vars() const { return vars_; }
    const std::map<ParityClass, Polynomial>& classes() const { return classes_; }

    void set_class(const ParityClass& parity, const Polynomial& poly) {
        if (static_cast<int>(parity.size()) != vars_)
            throw std::invalid_argument("QuasiPolynomial: parity length mismatch");
        if (poly.vars() != vars_)
            throw std::invalid_argument("QuasiPolynomial: polynomial variable count mismatch");
        if (poly.is_zero()) classes_.erase(parity);
        else classes_[parity] = poly;
    }

    Polynomial class_poly(const ParityClass& parity) const {
        auto it = classes_.find(parity);
        return it == classes_.end() ? Polynomial(vars_) : it->second;
    }

    // Exact evaluation at a nonnegative integer vector (zeros permitted; a
    // zero entry counts as even).
    Rational evaluate(const std::vector<long long>& b) const {
        if (static_cast<int>(b.size()) != vars_)
            throw std::invalid_argument("QuasiPolynomial: dimension mismatch");
        ParityClass parity(vars_);
        std::vector<BigInt> point(vars_);
        for (int i = 0; i < vars_; ++i) {
            if (b[i] < 0) throw std::invalid_argument("QuasiPolynomial: negative entry");
            parity[i] = static_cast<int>(b[i] & 1);
            point[i] = b[i];
        }
        auto it = classes_.find(parity);
        if (it == classes_.end()) return Rational(0);
        return it->second.evaluate(point);
    }

    friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
        return a.vars_ == b.vars_ && a.classes_ == b.classes_;
    }
    friend bool operator!=(const QuasiPolynomial& a, const QuasiPolynomial& b) { return !(a == b); }
};

// Exact solution of an (over)determined linear system by fraction-free
// Bareiss elimination. rows x cols, rows >= cols expected.
struct LinearSolve {
    enum class Status { Ok, Underdetermined, Inconsistent };
    Status status;
    std::vector<Rational> solution; // valid when status == Ok
};
LinearSolve solve_exact(std::vector<std::vector<BigInt>> matrix, std::vector<Rational> rhs);

// Interpolates the unique quasi-polynomial of the given degree in the
// squares b_i^2, symmetric within the odd-variable block and within the
// even-variable block of each parity class appearing among the samples.
// Every sample must be matched exactly; extra samples act as verification
// rows. Throws std::invalid_argument (underdetermined) or
// std::domain_error (inconsistent samples).
QuasiPolynomial qp_fit(const std::vector<std::pair<std::vector<long long>, Rational>>& samples,
                       int n, int max_degree_in_squares);

// Number of block-symmetric monomials in the squares for a parity class
// with the given block sizes; the minimum sample count for qp_fit.
size_t qp_basis_size(int odd_slots, int even_slots, int max_degree_in_squares);

} // namespace modcount
