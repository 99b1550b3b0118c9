#pragma once

// Text formats.
//
// Matrix file:    '#' comment lines, then n, then n rows of n decimals.
// Edge-list file: '#' comment lines, then "n m", then m lines "u v".
// Blank lines are ignored in both.

#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stochloc/graph.hpp"
#include "stochloc/matrix.hpp"
#include "stochloc/regions.hpp"

namespace stochloc {

namespace detail {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next line that is neither blank nor a comment, split on whitespace.
    std::optional<std::vector<std::string_view>> next() {
        while (std::getline(in_, buf_)) {
            ++line_;
            const auto first = buf_.find_first_not_of(" \t\r");
            if (first == std::string::npos || buf_[first] == '#') continue;
            std::vector<std::string_view> tokens;
            std::string_view rest(buf_);
            while (true) {
                const auto b = rest.find_first_not_of(" \t\r");
                if (b == std::string_view::npos) break;
                rest.remove_prefix(b);
                const auto e = rest.find_first_of(" \t\r");
                tokens.push_back(rest.substr(0, e));
                if (e == std::string_view::npos) break;
                rest.remove_prefix(e);
            }
            return tokens;
        }
        return std::nullopt;
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::istream& in_;
    std::string buf_;
    std::size_t line_ = 0;
};

template <class T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
    T value{};
    const char* b = tok.data();
    const char* e = b + tok.size();
    if (!tok.empty() && *b == '+') ++b;
    const auto [ptr, ec] = std::from_chars(b, e, value);
    if (ec != std::errc() || ptr != e)
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
    return value;
}

}  // namespace detail

/// Decimal literals are converted with round-to-nearest.
inline DenseMatrix parse_matrix(std::istream& in) {
    detail::LineReader reader(in);
    const auto header = reader.next();
    if (!header) throw ParseError(reader.line(), "missing matrix order");
    if (header->size() != 1) throw ParseError(reader.line(), "expected a single integer order");
    const auto n = detail::parse_number<std::size_t>((*header)[0], reader.line(), "matrix order");
    if (n == 0) throw ParseError(reader.line(), "matrix order must be positive");

    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = reader.next();
        if (!row)
            throw ParseError(reader.line(), "expected " + std::to_string(n) + " rows, found " +
                                                std::to_string(i));
        if (row->size() != n)
            throw ParseError(reader.line(), "expected " + std::to_string(n) + " entries, found " +
                                                std::to_string(row->size()));
        for (std::size_t j = 0; j < n; ++j) {
            const double v = detail::parse_number<double>((*row)[j], reader.line(), "a number");
            if (!std::isfinite(v)) throw ParseError(reader.line(), "non-finite entry");
            m(i, j) = v;
        }
    }
    if (reader.next()) throw ParseError(reader.line(), "unexpected content after the last row");
    return m;
}

/// Vertices are 1-based; self-loops and repeated edges are rejected with
/// the offending line number.
inline Graph parse_edge_list(std::istream& in) {
    detail::LineReader reader(in);
    const auto header = reader.next();
    if (!header) throw ParseError(reader.line(), "missing 'n m' header");
    if (header->size() != 2) throw ParseError(reader.line(), "expected 'n m'");
    const auto n = detail::parse_number<std::size_t>((*header)[0], reader.line(), "vertex count");
    const auto m = detail::parse_number<std::size_t>((*header)[1], reader.line(), "edge count");
    if (n == 0) throw ParseError(reader.line(), "vertex count must be positive");

    std::vector<Graph::Edge> edges;
    std::set<Graph::Edge> seen;
    for (std::size_t e = 0; e < m; ++e) {
        const auto tok = reader.next();
        if (!tok)
            throw ParseError(reader.line(), "expected " + std::to_string(m) + " edges, found " +
                                                std::to_string(e));
        if (tok->size() != 2) throw ParseError(reader.line(), "expected 'u v'");
        const auto u = detail::parse_number<std::size_t>((*tok)[0], reader.line(), "a vertex");
        const auto v = detail::parse_number<std::size_t>((*tok)[1], reader.line(), "a vertex");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(reader.line(), "vertex outside 1.." + std::to_string(n));
        if (u == v) throw ParseError(reader.line(), "self-loop at vertex " + std::to_string(u));
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw ParseError(reader.line(), "duplicate edge");
        edges.emplace_back(u, v);
    }
    if (reader.next()) throw ParseError(reader.line(), "unexpected content after the last edge");
    return Graph(n, edges);
}

/// {"n", "groups": [{"i", "discs": [{"cx","cy","r","label"}]}],
///  "special_point": [1, 0], optional "eigenvalues": [[re, im], ...]}
inline nlohmann::json region_to_json(const InclusionRegion& r,
                                     const std::vector<Complex>* eigenvalues = nullptr) {
    using nlohmann::json;
    json groups = json::array();
    for (std::size_t i = 0; i < r.groups.size(); ++i) {
        const auto& g = r.groups[i];
        json discs = json::array();
        for (std::size_t k = 0; k < g.discs.size(); ++k) {
            discs.push_back({{"cx", g.discs[k].center.real()},
                             {"cy", g.discs[k].center.imag()},
                             {"r", g.discs[k].radius},
                             {"label", g.labels[k]}});
        }
        groups.push_back({{"i", i + 1}, {"discs", std::move(discs)}});
    }
    json out = {{"n", r.groups.size()},
                {"groups", std::move(groups)},
                {"special_point", {r.special_point.real(), r.special_point.imag()}}};
    if (eigenvalues) {
        json ev = json::array();
        for (const auto& z : *eigenvalues) ev.push_back({z.real(), z.imag()});
        out["eigenvalues"] = std::move(ev);
    }
    return out;
}

inline InclusionRegion region_from_json(const nlohmann::json& j) {
    InclusionRegion r;
    for (const auto& g : j.at("groups")) {
        DiscUnion u;
        for (const auto& d : g.at("discs")) {
            u.discs.push_back(
                {Complex(d.at("cx").get<double>(), d.at("cy").get<double>()), d.at("r").get<double>()});
            u.labels.push_back(d.at("label").get<std::size_t>());
        }
        r.groups.push_back(std::move(u));
    }
    const auto& sp = j.at("special_point");
    r.special_point = Complex(sp.at(0).get<double>(), sp.at(1).get<double>());
    return r;
}

}  // namespace stochloc
