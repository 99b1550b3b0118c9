#pragma once

// Command implementations behind the stochloc CLI. Each command writes its
// report to `out`, diagnostics to `err`, and returns the process exit code:
// 0 success, 1 internal/numerical failure, 2 input or validation error.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stochloc/deflate.hpp"
#include "stochloc/eigen.hpp"
#include "stochloc/io.hpp"
#include "stochloc/randic.hpp"
#include "stochloc/regions.hpp"
#include "stochloc/svg.hpp"

namespace stochloc::app {

enum class Subcommand { Localize, Randic, Compare, Plot };
enum class Format { Text, Json, Svg };

struct RunConfig {
    Subcommand subcommand = Subcommand::Localize;
    std::string input_path;
    Format format = Format::Text;
    bool with_eigs = false;
    double row_sum_tol = kDefaultRowSumTolerance;
    /// Membership / containment / bound-check slack.
    double slack = 1e-8;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

namespace detail {

/// 6 significant digits.
inline std::string g6(double v) {
    if (v == 0.0) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string g6(Complex z) {
    if (z.imag() == 0.0) return g6(z.real());
    return g6(z.real()) + (z.imag() < 0 ? " - " : " + ") + g6(std::abs(z.imag())) + "i";
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open input file '" + path + "'");
    return in;
}

inline StochasticMatrix load_stochastic(const RunConfig& cfg) {
    auto in = open_input(cfg.input_path);
    auto s = validate_stochastic(parse_matrix(in), cfg.row_sum_tol);
    if (s.order() < 2) throw Error(ErrorKind::OrderTooSmall, "matrix order must be at least 2");
    return s;
}

inline Graph load_graph(const RunConfig& cfg) {
    auto in = open_input(cfg.input_path);
    return parse_edge_list(in);
}

inline constexpr const char* kReducibleWarning =
    "warning: matrix is reducible; the eigenvalue 1 may not be simple";

inline Spectrum oracle_spectrum(const StochasticMatrix& s) {
    return mark_perron(eig_general(s.matrix()), 1e-8);
}

}  // namespace detail

inline int cmd_localize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    using detail::g6;
    const auto s = detail::load_stochastic(cfg);
    const bool irreducible = is_irreducible(s);
    if (!irreducible && cfg.format != Format::Text) err << detail::kReducibleWarning << '\n';
    const auto region = full_inclusion_region(s);
    const auto cv = cvetkovic_classic(s);
    const auto ll = lili_classic(s);

    std::optional<Spectrum> spec;
    if (cfg.with_eigs) spec = detail::oracle_spectrum(s);

    if (cfg.format == Format::Json) {
        auto j = region_to_json(region, spec ? &spec->values : nullptr);
        j["irreducible"] = irreducible;
        j["row_sum_tol"] = cfg.row_sum_tol;
        j["cvetkovic"] = {{"gamma", cv.shift}, {"cx", cv.disc.center.real()},
                          {"r", cv.disc.radius}, {"clamped", cv.radius_clamped}};
        j["lili"] = {{"gamma_prime", ll.shift}, {"cx", ll.disc.center.real()},
                     {"r", ll.disc.radius}, {"clamped", ll.radius_clamped}};
        if (spec) {
            nlohmann::json mem = nlohmann::json::array();
            for (std::size_t e = 0; e < spec->size(); ++e) {
                const Complex z = spec->values[e];
                nlohmann::json groups = nlohmann::json::array();
                for (const auto& g : region.groups) groups.push_back(g.contains(z, cfg.slack));
                mem.push_back({{"eigenvalue", {z.real(), z.imag()}},
                               {"perron", spec->perron_index == e},
                               {"groups", groups},
                               {"region", contains(region, z, cfg.slack)},
                               {"cvetkovic", cv.disc.contains(z, cfg.slack)},
                               {"lili", ll.disc.contains(z, cfg.slack)}});
            }
            j["membership"] = std::move(mem);
        }
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    if (cfg.format == Format::Svg) {
        out << render_region_svg(region, spec ? &spec->values : nullptr);
        return kExitOk;
    }

    out << "matrix: n = " << s.order() << ", row-sum tolerance = " << g6(cfg.row_sum_tol) << '\n';
    out << "irreducible: " << (irreducible ? "yes" : "no") << '\n';
    if (!irreducible) out << detail::kReducibleWarning << '\n';
    out << "deflated Gershgorin regions G_S(i):\n";
    for (std::size_t i = 0; i < region.groups.size(); ++i) {
        const auto& g = region.groups[i];
        out << "  i = " << i + 1 << '\n';
        for (std::size_t k = 0; k < g.size(); ++k)
            out << "    k = " << g.labels[k] << ": center = " << g6(g.discs[k].center)
                << ", radius = " << g6(g.discs[k].radius) << '\n';
    }
    out << "column-minimum disc: gamma = " << g6(cv.shift) << ", center = " << g6(cv.disc.center)
        << ", radius = " << g6(cv.disc.radius) << (cv.radius_clamped ? " (radius clamped to 0)" : "")
        << '\n';
    out << "column-maximum disc: gamma' = " << g6(ll.shift) << ", center = " << g6(ll.disc.center)
        << ", radius = " << g6(ll.disc.radius) << (ll.radius_clamped ? " (radius clamped to 0)" : "")
        << '\n';

    if (spec) {
        out << "eigenvalues (membership with slack " << g6(cfg.slack) << "):\n";
        out << "  lambda";
        for (std::size_t i = 0; i < region.groups.size(); ++i) out << "  G_S(" << i + 1 << ")";
        out << "  region  column-min  column-max\n";
        for (std::size_t e = 0; e < spec->size(); ++e) {
            const Complex z = spec->values[e];
            const bool perron = spec->perron_index == e;
            out << "  " << g6(z) << (perron ? " (Perron)" : "");
            for (const auto& g : region.groups) out << "  " << (g.contains(z, cfg.slack) ? "in" : "OUT");
            out << "  " << (contains(region, z, cfg.slack) ? "in" : "OUT");
            if (perron) {
                out << "  -  -\n";
            } else {
                out << "  " << (cv.disc.contains(z, cfg.slack) ? "in" : "OUT") << "  "
                    << (ll.disc.contains(z, cfg.slack) ? "in" : "OUT") << '\n';
            }
        }
        if (!spec->perron_index) {
            err << "error: no eigenvalue within 1e-8 of 1\n";
            return kExitInternal;
        }
        for (std::size_t e = 0; e < spec->size(); ++e)
            if (!contains(region, spec->values[e], cfg.slack)) {
                err << "error: eigenvalue " << g6(spec->values[e]) << " escapes the region\n";
                return kExitInternal;
            }
    }
    return kExitOk;
}

inline int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    using detail::g6;
    const auto s = detail::load_stochastic(cfg);
    const bool irreducible = is_irreducible(s);
    if (!irreducible && cfg.format != Format::Text) err << detail::kReducibleWarning << '\n';
    const auto region = full_inclusion_region(s);
    const auto cv = cvetkovic_disc(s);
    const auto ll = lili_disc(s);

    struct Row {
        std::size_t i;
        bool in_cv, in_ll;
        double lo, hi;
    };
    std::vector<Row> rows;
    std::size_t tightest = 0;
    for (std::size_t i = 0; i < region.groups.size(); ++i) {
        const auto& g = region.groups[i];
        const auto [lo, hi] = real_interval_hull(g);
        rows.push_back({i + 1, disc_union_in_disc(g, cv, cfg.slack), disc_union_in_disc(g, ll, cfg.slack), lo, hi});
        if (hi - lo < rows[tightest].hi - rows[tightest].lo) tightest = i;
    }

    if (cfg.format == Format::Json) {
        nlohmann::json j;
        j["n"] = s.order();
        j["irreducible"] = irreducible;
        j["cvetkovic"] = {{"cx", cv.center.real()}, {"r", cv.radius}};
        j["lili"] = {{"cx", ll.center.real()}, {"r", ll.radius}};
        nlohmann::json groups = nlohmann::json::array();
        for (const auto& r : rows)
            groups.push_back({{"i", r.i}, {"in_cvetkovic", r.in_cv}, {"in_lili", r.in_ll},
                              {"hull", {r.lo, r.hi}}});
        j["groups"] = std::move(groups);
        j["tightest"] = rows[tightest].i;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    if (cfg.format == Format::Svg) {
        out << render_region_svg(region);
        return kExitOk;
    }

    if (!irreducible) out << detail::kReducibleWarning << '\n';
    out << "column-minimum disc: center = " << g6(cv.center) << ", radius = " << g6(cv.radius) << '\n';
    out << "column-maximum disc: center = " << g6(ll.center) << ", radius = " << g6(ll.radius) << '\n';
    out << "group   in column-min  in column-max  real hull\n";
    for (const auto& r : rows)
        out << "G_S(" << r.i << ")  " << (r.in_cv ? "true" : "false") << "  "
            << (r.in_ll ? "true" : "false") << "  [" << g6(r.lo) << ", " << g6(r.hi) << "]\n";
    out << "tightest group: G_S(" << rows[tightest].i << "), hull width "
        << g6(rows[tightest].hi - rows[tightest].lo) << '\n';
    return kExitOk;
}

inline int cmd_plot(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto s = detail::load_stochastic(cfg);
    if (!is_irreducible(s)) err << detail::kReducibleWarning << '\n';
    const auto region = full_inclusion_region(s);
    std::optional<Spectrum> spec;
    if (cfg.with_eigs) spec = detail::oracle_spectrum(s);
    out << render_region_svg(region, spec ? &spec->values : nullptr);
    return kExitOk;
}

inline int cmd_randic(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    using detail::g6;
    const Graph g = detail::load_graph(cfg);
    const BoundReport rep = randic_bounds(g);
    const LaplacianBounds lap = normalized_laplacian_bounds(g);
    const double rojo = rojo_soto_bound(g);
    std::optional<RegularBoundReport> reg;
    if (g.regular_degree()) reg = regular_graph_bounds(g);

    std::optional<double> lam2, lamn;
    if (cfg.with_eigs) {
        const auto spec = eig_symmetric(symmetric_randic(g));
        lam2 = spec.values[1].real();
        lamn = spec.values.back().real();
    }
    const bool violated = lam2 && (*lam2 > rep.upper_bound + cfg.slack || *lamn < rep.lower_bound - cfg.slack);

    if (cfg.format == Format::Json) {
        nlohmann::json j;
        j["n"] = g.order();
        j["m"] = g.edge_count();
        j["alpha"] = rep.alpha;
        j["beta"] = rep.beta;
        j["lambda_n_lower"] = rep.lower_bound;
        j["lambda_2_upper"] = rep.upper_bound;
        j["rho_2_lower"] = lap.rho2_lower;
        j["rho_n_upper"] = lap.rhon_upper;
        j["rojo_soto_radius"] = rojo;
        j["rojo_soto_lambda_n_lower"] = -rojo;
        if (reg)
            j["regular"] = {{"r", reg->degree},
                            {"gamma", reg->gamma},
                            {"delta", reg->delta},
                            {"lambda_n_lower", reg->lower_bound},
                            {"lambda_2_upper", reg->upper_bound},
                            {"differs_from_general", reg->differs_from_general}};
        if (lam2) {
            j["oracle_lambda_2"] = *lam2;
            j["oracle_lambda_n"] = *lamn;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "graph: n = " << g.order() << ", m = " << g.edge_count() << '\n';
        out << "vertex  degree  alpha_i  beta_i\n";
        for (std::size_t v = 1; v <= g.order(); ++v)
            out << "  " << v << "  " << g.degree(v) << "  " << g6(rep.alpha[v - 1]) << "  "
                << g6(rep.beta[v - 1]) << '\n';
        out << "randic bounds: lambda_n >= " << g6(rep.lower_bound) << ", lambda_2 <= "
            << g6(rep.upper_bound) << '\n';
        out << "normalized laplacian bounds: rho_2 >= " << g6(lap.rho2_lower) << ", rho_n <= "
            << g6(lap.rhon_upper) << '\n';
        if (reg) {
            out << "regular graph (r = " << reg->degree << ") bounds: lambda_n >= "
                << g6(reg->lower_bound) << ", lambda_2 <= " << g6(reg->upper_bound) << '\n';
            if (reg->differs_from_general)
                out << "note: regular-graph formula clamps before scaling by 1/r and is weaker here "
                       "than the general bounds (lambda_n >= "
                    << g6(reg->general.lower_bound) << ", lambda_2 <= " << g6(reg->general.upper_bound)
                    << ")\n";
        }
        out << "rojo-soto lower bound: " << g6(-rojo) << '\n';
        if (lam2) {
            auto verdict = [&](double gap) {
                if (gap < -cfg.slack) return "VIOLATED";
                return gap <= cfg.slack ? "tight" : "ok";
            };
            const double gap2 = rep.upper_bound - *lam2;
            const double gapn = *lamn - rep.lower_bound;
            out << "oracle lambda_2 = " << g6(*lam2) << " (gap to bound " << g6(gap2) << ", "
                << verdict(gap2) << ")\n";
            out << "oracle lambda_n = " << g6(*lamn) << " (gap to bound " << g6(gapn) << ", "
                << verdict(gapn) << ")\n";
            out << "oracle lambda_n vs rojo-soto: gap " << g6(*lamn + rojo) << '\n';
        }
    }
    if (violated) {
        err << "error: oracle eigenvalue violates a bound\n";
        return kExitInternal;
    }
    return kExitOk;
}

/// Dispatches and maps exceptions onto exit codes.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.subcommand) {
            case Subcommand::Localize: return cmd_localize(cfg, out, err);
            case Subcommand::Compare: return cmd_compare(cfg, out, err);
            case Subcommand::Plot: return cmd_plot(cfg, out, err);
            case Subcommand::Randic: return cmd_randic(cfg, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.is_input_error() ? kExitInput : kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}

}  // namespace stochloc::app
