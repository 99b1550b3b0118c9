#pragma once

// Gershgorin-type eigenvalue inclusion regions for stochastic matrices.
//
// Regions are kept symbolic: a DiscUnion is a list of closed discs, and an
// InclusionRegion is the intersection over deflation indices i of
// (union of the deflated discs for i) together with the point 1.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "stochloc/deflate.hpp"
#include "stochloc/matrix.hpp"

namespace stochloc {

struct Disc {
    Complex center{0.0, 0.0};
    double radius = 0.0;

    bool contains(Complex z, double slack = 0.0) const {
        return std::abs(z - center) <= radius + slack;
    }
};

struct DiscUnion {
    std::vector<Disc> discs;
    /// Original 1-based row label of each disc.
    std::vector<std::size_t> labels;

    std::size_t size() const noexcept { return discs.size(); }

    bool contains(Complex z, double slack = 0.0) const {
        return std::any_of(discs.begin(), discs.end(),
                           [&](const Disc& d) { return d.contains(z, slack); });
    }
};

struct InclusionRegion {
    /// groups[i-1] is the deflated disc union for index i.
    std::vector<DiscUnion> groups;
    Complex special_point{1.0, 0.0};

    std::size_t order() const noexcept { return groups.size(); }
};

/// One disc per row: center m_kk, radius the absolute off-diagonal row sum.
/// Labels are 1..n.
inline DiscUnion gershgorin_discs(const DenseMatrix& m) {
    DiscUnion u;
    const std::size_t n = m.order();
    u.discs.reserve(n);
    u.labels.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        double r = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) r += std::abs(m(k, j));
        u.discs.push_back({Complex(m(k, k), 0.0), r});
        u.labels.push_back(k + 1);
    }
    return u;
}

/// Gershgorin discs of the deflation at index i (1-based), labelled with the
/// original row indices. Disc k has center s_kk - s_ik and radius
/// sum_{j not in {i,k}} |s_kj - s_ij|.
inline DiscUnion deflated_region(const StochasticMatrix& s, std::size_t i) {
    const DeflatedMatrix d = deflate(s, i);
    DiscUnion u = gershgorin_discs(d.inner);
    u.labels = d.index_map;
    return u;
}

inline InclusionRegion full_inclusion_region(const StochasticMatrix& s) {
    if (s.order() < 2) throw Error(ErrorKind::OrderTooSmall, "inclusion region needs order >= 2");
    InclusionRegion r;
    r.groups.reserve(s.order());
    for (std::size_t i = 1; i <= s.order(); ++i) r.groups.push_back(deflated_region(s, i));
    return r;
}

/// z is in the region iff it is (within slack) the special point, or lies
/// (within slack) in some disc of every group.
inline bool contains(const InclusionRegion& r, Complex z, double slack = 0.0) {
    if (std::abs(z - r.special_point) <= slack) return true;
    return std::all_of(r.groups.begin(), r.groups.end(),
                       [&](const DiscUnion& g) { return g.contains(z, slack); });
}

/// Single disc together with the shift parameter that produced it, for
/// reporting.
struct ClassicDisc {
    Disc disc;
    /// gamma for the column-minimum disc, gamma' for the column-maximum one.
    double shift = 0.0;
    /// True when the radius formula went negative beyond rounding and was
    /// clamped to 0.
    bool radius_clamped = false;
};

namespace detail {

inline ClassicDisc make_classic(double center, double radius, double shift) {
    ClassicDisc c;
    c.shift = shift;
    c.radius_clamped = radius < -64.0 * std::numeric_limits<double>::epsilon();
    c.disc = {Complex(center, 0.0), std::max(radius, 0.0)};
    return c;
}

}  // namespace detail

/// Disc from column minima: with s_i = min_{j != i} s_ji and
/// gamma = max_i (s_ii - s_i), every non-Perron eigenvalue satisfies
/// |z - gamma| <= 1 - trace(S) + (n-1) gamma.
inline ClassicDisc cvetkovic_classic(const StochasticMatrix& s) {
    const std::size_t n = s.order();
    if (n < 2) throw Error(ErrorKind::OrderTooSmall, "classic discs need order >= 2");
    double gamma = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double col_min = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) col_min = std::min(col_min, s(j, i));
        gamma = std::max(gamma, s(i, i) - col_min);
    }
    const double radius = 1.0 - trace(s) + static_cast<double>(n - 1) * gamma;
    return detail::make_classic(gamma, radius, gamma);
}

/// Disc from column maxima: with S_i = max_{j != i} s_ji and
/// gamma' = max_i (S_i - s_ii), every non-Perron eigenvalue satisfies
/// |z + gamma'| <= trace(S) + (n-1) gamma' - 1.
inline ClassicDisc lili_classic(const StochasticMatrix& s) {
    const std::size_t n = s.order();
    if (n < 2) throw Error(ErrorKind::OrderTooSmall, "classic discs need order >= 2");
    double gamma = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double col_max = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) col_max = std::max(col_max, s(j, i));
        gamma = std::max(gamma, col_max - s(i, i));
    }
    const double radius = trace(s) + static_cast<double>(n - 1) * gamma - 1.0;
    return detail::make_classic(-gamma, radius, gamma);
}

inline Disc cvetkovic_disc(const StochasticMatrix& s) { return cvetkovic_classic(s).disc; }
inline Disc lili_disc(const StochasticMatrix& s) { return lili_classic(s).disc; }

/// True iff every member disc (c, r) satisfies |c - d.center| + r <= d.radius + slack.
inline bool disc_union_in_disc(const DiscUnion& u, const Disc& d, double slack = 0.0) {
    return std::all_of(u.discs.begin(), u.discs.end(), [&](const Disc& m) {
        return std::abs(m.center - d.center) + m.radius <= d.radius + slack;
    });
}

/// Projection of a union of real-centered discs onto the real axis:
/// [min (c - r), max (c + r)].
inline std::pair<double, double> real_interval_hull(const DiscUnion& u) {
    if (u.discs.empty()) throw Error(ErrorKind::InvalidArgument, "empty disc union");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const Disc& d : u.discs) {
        if (d.center.imag() != 0.0)
            throw Error(ErrorKind::ComplexCenters, "disc union has a non-real center");
        lo = std::min(lo, d.center.real() - d.radius);
        hi = std::max(hi, d.center.real() + d.radius);
    }
    return {lo, hi};
}

}  // namespace stochloc
