#pragma once

// Shared fixtures and random generators for the test suites.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "stochloc/stochloc.hpp"

namespace stochloc::test {

inline DenseMatrix example1() {
    return {{0.25, 0.25, 0.3, 0.2}, {0, 0.5, 0.33, 0.17}, {0.6, 0.4, 0, 0}, {0.1, 0.2, 0.3, 0.4}};
}

inline StochasticMatrix example1_stochastic() { return validate_stochastic(example1()); }

/// The 7-vertex graph whose edge {5,7} lies in no triangle.
inline Graph example2() {
    return Graph(7, {{1, 2}, {1, 3}, {1, 6}, {1, 7}, {2, 3}, {2, 4}, {2, 5},
                     {2, 6}, {3, 4}, {3, 7}, {4, 5}, {4, 6}, {5, 6}, {5, 7}});
}

inline Graph complete(std::size_t n) {
    std::vector<Graph::Edge> e;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<Graph::Edge> e;
    for (std::size_t i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
    return Graph(n, e);
}

inline Graph path(std::size_t n) {
    std::vector<Graph::Edge> e;
    for (std::size_t i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

/// Star with center 1 and leaves 2..n.
inline Graph star(std::size_t n) {
    std::vector<Graph::Edge> e;
    for (std::size_t i = 2; i <= n; ++i) e.emplace_back(1, i);
    return Graph(n, e);
}

/// Every row drawn from the open simplex (normalized exponentials), so all
/// entries are positive and the matrix is irreducible.
inline StochasticMatrix random_positive_stochastic(std::size_t n, std::mt19937_64& rng) {
    std::exponential_distribution<double> expo(1.0);
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += m(i, j) = expo(rng) + 1e-12;
        for (std::size_t j = 0; j < n; ++j) m(i, j) /= sum;
    }
    return validate_stochastic(std::move(m), 1e-12);
}

/// Sparse variant: each row keeps a random subset of positive entries plus
/// a cyclic successor, so the digraph contains a Hamiltonian cycle and the
/// matrix stays irreducible while having many zeros.
inline StochasticMatrix random_sparse_stochastic(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, (i + 1) % n) = 0.05 + unif(rng);
        for (std::size_t j = 0; j < n; ++j)
            if (unif(rng) < 0.3) m(i, j) += unif(rng);
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += m(i, j);
        for (std::size_t j = 0; j < n; ++j) m(i, j) /= sum;
    }
    return validate_stochastic(std::move(m), 1e-12);
}

/// Random spanning tree (each vertex attached to a random earlier vertex of a
/// random ordering) plus each remaining pair with probability p.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::set<Graph::Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        const std::size_t u = perm[i], v = perm[pick(rng)];
        edges.insert({std::min(u, v), std::max(u, v)});
    }
    std::bernoulli_distribution extra(p);
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v)
            if (extra(rng)) edges.insert({u, v});
    return Graph(n, std::vector<Graph::Edge>(edges.begin(), edges.end()));
}

/// P M P^T for the permutation sending index i to perm[i] (0-based).
inline DenseMatrix permuted(const DenseMatrix& m, const std::vector<std::size_t>& perm) {
    DenseMatrix out(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) out(perm[i], perm[j]) = m(i, j);
    return out;
}

inline Graph relabeled(const Graph& g, const std::vector<std::size_t>& perm) {
    std::vector<Graph::Edge> e;
    for (const auto& [u, v] : g.edges()) e.emplace_back(perm[u - 1] + 1, perm[v - 1] + 1);
    return Graph(g.order(), e);
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline std::vector<Complex> with_one(std::vector<Complex> v) {
    v.emplace_back(1.0, 0.0);
    return v;
}

}  // namespace stochloc::test
