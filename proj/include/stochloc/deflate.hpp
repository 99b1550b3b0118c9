#pragma once

#include <cstddef>
#include <vector>

#include "stochloc/matrix.hpp"

namespace stochloc {

/// Order n-1 matrix carrying the non-Perron spectrum of a stochastic
/// matrix: the k-deleted principal submatrix minus, in every row, the
/// k-deleted row of the original.
struct DeflatedMatrix {
    std::size_t base_order = 0;
    std::size_t removed_index = 0;  // 1-based
    DenseMatrix inner;
    /// Original 1-based labels of inner's rows/columns, increasing.
    std::vector<std::size_t> index_map;
};

/// k is 1-based.
inline DeflatedMatrix deflate(const StochasticMatrix& s, std::size_t k) {
    const std::size_t n = s.order();
    if (n < 2) throw Error(ErrorKind::OrderTooSmall, "deflation needs order >= 2");
    if (k < 1 || k > n)
        throw Error(ErrorKind::IndexOutOfRange,
                    "deflation index " + std::to_string(k) + " outside 1.." + std::to_string(n));

    DeflatedMatrix d;
    d.base_order = n;
    d.removed_index = k;
    d.index_map.reserve(n - 1);
    for (std::size_t i = 1; i <= n; ++i)
        if (i != k) d.index_map.push_back(i);

    d.inner = DenseMatrix(n - 1);
    const std::size_t kr = k - 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        const std::size_t ip = d.index_map[p] - 1;
        for (std::size_t q = 0; q + 1 < n; ++q) {
            const std::size_t iq = d.index_map[q] - 1;
            d.inner(p, q) = s(ip, iq) - s(kr, iq);
        }
    }
    return d;
}

inline std::vector<DeflatedMatrix> deflated_all(const StochasticMatrix& s) {
    if (s.order() < 2) throw Error(ErrorKind::OrderTooSmall, "deflation needs order >= 2");
    std::vector<DeflatedMatrix> out;
    out.reserve(s.order());
    for (std::size_t k = 1; k <= s.order(); ++k) out.push_back(deflate(s, k));
    return out;
}

}  // namespace stochloc
