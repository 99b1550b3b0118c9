#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stochloc/error.hpp"

namespace stochloc {

/// Simple undirected graph on vertices 1..n.
class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    Graph() = default;

    /// Rejects self-loops, duplicate edges (in either orientation) and
    /// endpoints outside 1..n.
    Graph(std::size_t n, const std::vector<Edge>& edges)
        : n_(n), adj_(n * n, 0), neighbors_(n) {
        for (const auto& [u, v] : edges) {
            if (u < 1 || u > n || v < 1 || v > n)
                throw Error(ErrorKind::VertexOutOfRange,
                            "edge {" + std::to_string(u) + ", " + std::to_string(v) +
                                "} has an endpoint outside 1.." + std::to_string(n));
            if (u == v)
                throw Error(ErrorKind::InvalidGraph, "self-loop at vertex " + std::to_string(u));
            if (adj_[(u - 1) * n + (v - 1)])
                throw Error(ErrorKind::InvalidGraph, "duplicate edge {" + std::to_string(u) + ", " +
                                                         std::to_string(v) + "}");
            adj_[(u - 1) * n + (v - 1)] = 1;
            adj_[(v - 1) * n + (u - 1)] = 1;
            neighbors_[u - 1].push_back(v);
            neighbors_[v - 1].push_back(u);
            edges_.emplace_back(std::min(u, v), std::max(u, v));
        }
        for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Edges as (min, max) pairs in insertion order.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool adjacent(std::size_t u, std::size_t v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[(u - 1) * n_ + (v - 1)] != 0;
    }

    std::size_t degree(std::size_t v) const {
        check_vertex(v);
        return neighbors_[v - 1].size();
    }

    /// Sorted neighbor labels of v.
    const std::vector<std::size_t>& neighbors(std::size_t v) const {
        check_vertex(v);
        return neighbors_[v - 1];
    }

    bool is_connected() const {
        if (n_ == 0) return false;
        std::vector<bool> seen(n_, false);
        std::vector<std::size_t> stack{1};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : neighbors_[u - 1]) {
                if (!seen[v - 1]) {
                    seen[v - 1] = true;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        return count == n_;
    }

    /// Common degree if every vertex has the same degree.
    std::optional<std::size_t> regular_degree() const {
        if (n_ == 0) return std::nullopt;
        const std::size_t r = neighbors_[0].size();
        for (const auto& nb : neighbors_)
            if (nb.size() != r) return std::nullopt;
        return r;
    }

    void check_vertex(std::size_t v) const {
        if (v < 1 || v > n_)
            throw Error(ErrorKind::VertexOutOfRange,
                        "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    }

private:
    std::size_t n_ = 0;
    std::vector<char> adj_;
    std::vector<std::vector<std::size_t>> neighbors_;
    std::vector<Edge> edges_;
};

/// |N_i intersect N_j|.
inline std::size_t common_neighbors(const Graph& g, std::size_t i, std::size_t j) {
    g.check_vertex(i);
    g.check_vertex(j);
    if (i == j) throw Error(ErrorKind::InvalidArgument, "common_neighbors needs distinct vertices");
    const auto& a = g.neighbors(i);
    const auto& b = g.neighbors(j);
    std::size_t count = 0;
    auto p = a.begin();
    auto q = b.begin();
    while (p != a.end() && q != b.end()) {
        if (*p < *q) {
            ++p;
        } else if (*q < *p) {
            ++q;
        } else {
            ++count;
            ++p;
            ++q;
        }
    }
    return count;
}

}  // namespace stochloc
