#pragma once

// Randic matrices of connected graphs and closed-form bounds on their
// extreme non-Perron eigenvalues.
//
// The bounds come from the deflated Gershgorin discs of the stochastic
// Randic matrix D^{-1} A. For a fixed deflation index i and vertex k != i
// the disc reaches left to -2 + alpha_ik and right to 2 - beta_ik, where
// alpha/beta depend only on degrees and common-neighbor counts. Everything
// here is computed from the graph; the matrix route lives in regions.hpp
// and is used only as a cross-check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "stochloc/graph.hpp"
#include "stochloc/matrix.hpp"

namespace stochloc {

namespace detail {

inline void require_connected(const Graph& g) {
    if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "graph is not connected");
}

inline void require_randic_ready(const Graph& g) {
    if (g.order() == 0) throw Error(ErrorKind::OrderTooSmall, "graph has no vertices");
    require_connected(g);
    for (std::size_t v = 1; v <= g.order(); ++v)
        if (g.degree(v) == 0)
            throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(v) + " is isolated");
}

inline void require_bounds_ready(const Graph& g) {
    if (g.order() < 2) throw Error(ErrorKind::OrderTooSmall, "bounds need at least 2 vertices");
    require_connected(g);
}

inline double common_over_max_degree(const Graph& g, std::size_t i, std::size_t k) {
    const double dmax = static_cast<double>(std::max(g.degree(i), g.degree(k)));
    return static_cast<double>(common_neighbors(g, i, k)) / dmax;
}

}  // namespace detail

/// Stochastic Randic matrix D^{-1} A: entry (i, j) is 1/d_i when i ~ j.
inline StochasticMatrix randic_matrix(const Graph& g) {
    detail::require_randic_ready(g);
    const std::size_t n = g.order();
    DenseMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const double w = 1.0 / static_cast<double>(g.degree(i));
        for (std::size_t j : g.neighbors(i)) m(i - 1, j - 1) = w;
    }
    return validate_stochastic(std::move(m), 1e-12);
}

/// Symmetric Randic matrix D^{-1/2} A D^{-1/2}.
inline DenseMatrix symmetric_randic(const Graph& g) {
    detail::require_randic_ready(g);
    const std::size_t n = g.order();
    DenseMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j : g.neighbors(i))
            m(i - 1, j - 1) =
                1.0 / std::sqrt(static_cast<double>(g.degree(i)) * static_cast<double>(g.degree(j)));
    return m;
}

/// alpha_ik = [k ~ i] / d_k + 2 N(i,k) / max(d_i, d_k).
inline double alpha(const Graph& g, std::size_t i, std::size_t k) {
    const double shared = 2.0 * detail::common_over_max_degree(g, i, k);
    if (!g.adjacent(i, k)) return shared;
    return 1.0 / static_cast<double>(g.degree(k)) + shared;
}

/// beta_ik = [k ~ i] (1/d_k + 2/d_i) + 2 N(i,k) / max(d_i, d_k).
inline double beta(const Graph& g, std::size_t i, std::size_t k) {
    const double shared = 2.0 * detail::common_over_max_degree(g, i, k);
    if (!g.adjacent(i, k)) return shared;
    return 1.0 / static_cast<double>(g.degree(k)) + 2.0 / static_cast<double>(g.degree(i)) + shared;
}

struct BoundReport {
    /// alpha[i-1] = min_{k != i} alpha_ik; likewise beta.
    std::vector<double> alpha;
    std::vector<double> beta;
    /// Lower bound on the smallest eigenvalue lambda_n.
    double lower_bound = -1.0;
    /// Upper bound on the second largest eigenvalue lambda_2.
    double upper_bound = 1.0;
};

inline BoundReport randic_bounds(const Graph& g) {
    detail::require_bounds_ready(g);
    const std::size_t n = g.order();
    BoundReport rep;
    rep.alpha.resize(n);
    rep.beta.resize(n);
    for (std::size_t i = 1; i <= n; ++i) {
        double a = std::numeric_limits<double>::infinity();
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t k = 1; k <= n; ++k) {
            if (k == i) continue;
            a = std::min(a, alpha(g, i, k));
            b = std::min(b, beta(g, i, k));
        }
        rep.alpha[i - 1] = a;
        rep.beta[i - 1] = b;
    }
    const double amax = *std::max_element(rep.alpha.begin(), rep.alpha.end());
    const double bmax = *std::max_element(rep.beta.begin(), rep.beta.end());
    rep.lower_bound = -2.0 + std::max(amax, 1.0);
    rep.upper_bound = 2.0 - std::max(bmax, 1.0);
    return rep;
}

struct LaplacianBounds {
    /// Lower bound on the smallest nonzero normalized Laplacian eigenvalue.
    double rho2_lower = 0.0;
    /// Upper bound on the largest one.
    double rhon_upper = 2.0;
};

/// Same bounds pushed through rho = 1 - lambda.
inline LaplacianBounds normalized_laplacian_bounds(const Graph& g) {
    const BoundReport r = randic_bounds(g);
    const double amax = *std::max_element(r.alpha.begin(), r.alpha.end());
    const double bmax = *std::max_element(r.beta.begin(), r.beta.end());
    return {-1.0 + std::max(bmax, 1.0), 3.0 - std::max(amax, 1.0)};
}

/// Bounds for r-regular graphs using gamma_ik = r alpha_ik and
/// delta_ik = r beta_ik, with the max-with-1 clamp applied before the 1/r
/// scaling as in the published corollary. That is weaker than the general
/// bound whenever r > 1 and the clamp binds, so the general bound is
/// carried alongside.
struct RegularBoundReport {
    std::size_t degree = 0;
    /// gamma[i-1] = min_{k != i} gamma_ik; likewise delta.
    std::vector<double> gamma;
    std::vector<double> delta;
    double lower_bound = -1.0;
    double upper_bound = 1.0;
    BoundReport general;
    /// True when the literal bounds differ from the general ones.
    bool differs_from_general = false;
};

inline RegularBoundReport regular_graph_bounds(const Graph& g) {
    detail::require_bounds_ready(g);
    const auto r = g.regular_degree();
    if (!r) throw Error(ErrorKind::NotRegular, "graph is not regular");
    const std::size_t n = g.order();

    RegularBoundReport rep;
    rep.degree = *r;
    rep.gamma.resize(n);
    rep.delta.resize(n);
    for (std::size_t i = 1; i <= n; ++i) {
        double gmin = std::numeric_limits<double>::infinity();
        double dmin = std::numeric_limits<double>::infinity();
        for (std::size_t k = 1; k <= n; ++k) {
            if (k == i) continue;
            const double twice_common = 2.0 * static_cast<double>(common_neighbors(g, i, k));
            const bool adj = g.adjacent(i, k);
            gmin = std::min(gmin, (adj ? 1.0 : 0.0) + twice_common);
            dmin = std::min(dmin, (adj ? 3.0 : 0.0) + twice_common);
        }
        rep.gamma[i - 1] = gmin;
        rep.delta[i - 1] = dmin;
    }
    const double rd = static_cast<double>(*r);
    const double gmax = *std::max_element(rep.gamma.begin(), rep.gamma.end());
    const double dmax = *std::max_element(rep.delta.begin(), rep.delta.end());
    rep.lower_bound = -2.0 + std::max(gmax, 1.0) / rd;
    rep.upper_bound = 2.0 - std::max(dmax, 1.0) / rd;
    rep.general = randic_bounds(g);
    rep.differs_from_general = std::abs(rep.lower_bound - rep.general.lower_bound) > 1e-12 ||
                               std::abs(rep.upper_bound - rep.general.upper_bound) > 1e-12;
    return rep;
}

/// Radius 1 - min_{i ~ j} N(i,j) / max(d_i, d_j) of the disc about 0 that
/// contains the most negative Randic eigenvalue. The lower bound on
/// lambda_n is its negation.
inline double rojo_soto_bound(const Graph& g) {
    if (g.edge_count() == 0) throw Error(ErrorKind::NoEdges, "graph has no edges");
    detail::require_connected(g);
    double m = std::numeric_limits<double>::infinity();
    for (const auto& [u, v] : g.edges()) m = std::min(m, detail::common_over_max_degree(g, u, v));
    return 1.0 - m;
}

}  // namespace stochloc
