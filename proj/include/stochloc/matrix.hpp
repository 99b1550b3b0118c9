#pragma once

// Dense real matrices, stochastic validation and spectra.
//
// Element access on DenseMatrix is 0-based like any C++ container. Every
// domain-level index (deflation index, disc label, row number in an error)
// is 1-based.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "stochloc/error.hpp"

namespace stochloc {

class DenseMatrix {
public:
    DenseMatrix() = default;

    /// Zero matrix of order n.
    explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) {
        assign_rows(rows);
    }

    explicit DenseMatrix(const std::vector<std::vector<double>>& rows) { assign_rows(rows); }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t order() const noexcept { return n_; }

    double& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    std::span<const double> row(std::size_t r) const { return {a_.data() + r * n_, n_}; }
    std::span<double> row(std::size_t r) { return {a_.data() + r * n_, n_}; }

    bool all_finite() const {
        for (double v : a_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    /// Largest absolute entry.
    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    bool operator==(const DenseMatrix&) const = default;

private:
    template <class Rows>
    void assign_rows(const Rows& rows) {
        n_ = rows.size();
        a_.clear();
        a_.reserve(n_ * n_);
        for (const auto& r : rows) {
            if (r.size() != n_) throw Error(ErrorKind::NotSquare, "matrix is not square");
            a_.insert(a_.end(), r.begin(), r.end());
        }
        if (!all_finite()) throw Error(ErrorKind::NonFinite, "matrix has a non-finite entry");
    }

    std::size_t n_ = 0;
    std::vector<double> a_;
};

inline constexpr double kDefaultRowSumTolerance = 1e-9;

/// Non-negative square matrix with unit row sums. Only obtainable through
/// validate_stochastic().
class StochasticMatrix {
public:
    const DenseMatrix& matrix() const noexcept { return m_; }
    std::size_t order() const noexcept { return m_.order(); }
    double operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
    double row_sum_tolerance() const noexcept { return tol_; }

private:
    StochasticMatrix(DenseMatrix m, double tol) : m_(std::move(m)), tol_(tol) {}
    friend StochasticMatrix validate_stochastic(DenseMatrix, double);

    DenseMatrix m_;
    double tol_;
};

/// Entries in [-tol, 0) are clamped to 0; anything more negative, or a row
/// whose sum is off by more than tol, is rejected.
inline StochasticMatrix validate_stochastic(DenseMatrix m, double tol = kDefaultRowSumTolerance) {
    if (!(tol >= 0.0) || !std::isfinite(tol))
        throw Error(ErrorKind::InvalidArgument, "row-sum tolerance must be a finite non-negative number");
    if (m.order() == 0) throw Error(ErrorKind::OrderTooSmall, "matrix has order 0");
    if (!m.all_finite()) throw Error(ErrorKind::NonFinite, "matrix has a non-finite entry");

    const std::size_t n = m.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double& v = m(i, j);
            if (v < -tol) throw NegativeEntryError(i + 1, j + 1, v);
            if (v < 0.0) v = 0.0;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (double v : m.row(i)) sum += v;
        if (std::abs(sum - 1.0) > tol) throw RowSumError(i + 1, sum);
    }
    return StochasticMatrix(std::move(m), tol);
}

inline double trace(const DenseMatrix& m) {
    double t = 0.0;
    for (std::size_t i = 0; i < m.order(); ++i) t += m(i, i);
    return t;
}

inline double trace(const StochasticMatrix& s) { return trace(s.matrix()); }

namespace detail {

// Vertices reachable from vertex 0 along arcs i -> j with m(i, j) > 0
// (or j -> i when reversed).
inline std::vector<bool> reachable_from_first(const DenseMatrix& m, bool reversed) {
    const std::size_t n = m.order();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            const double w = reversed ? m(v, u) : m(u, v);
            if (w > 0.0 && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

}  // namespace detail

/// True iff the digraph with an arc i -> j for every positive entry is
/// strongly connected. An order-1 matrix counts as irreducible.
inline bool is_irreducible(const StochasticMatrix& s) {
    const auto& m = s.matrix();
    if (m.order() <= 1) return true;
    for (bool reversed : {false, true}) {
        const auto seen = detail::reachable_from_first(m, reversed);
        for (bool b : seen)
            if (!b) return false;
    }
    return true;
}

using Complex = std::complex<double>;

/// Eigenvalue multiset. perron_index, when set, points at the value
/// identified as the Perron root 1.
struct Spectrum {
    std::vector<Complex> values;
    std::optional<std::size_t> perron_index;
    /// Set by non_perron() when more than one eigenvalue was within
    /// tolerance of 1 (the matrix is reducible).
    bool repeated_perron = false;

    std::size_t size() const noexcept { return values.size(); }
};

}  // namespace stochloc
