#pragma once

// Static SVG plot of an inclusion region. Output depends only on the
// input geometry, so identical inputs give byte-identical documents.

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "stochloc/regions.hpp"

namespace stochloc {

namespace detail {

inline std::string num(double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

struct Box {
    double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;

    void include(double x, double y, double r = 0.0) {
        xmin = std::min(xmin, x - r);
        xmax = std::max(xmax, x + r);
        ymin = std::min(ymin, y - r);
        ymax = std::max(ymax, y + r);
    }
};

inline constexpr std::array<const char*, 8> kGroupColors = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};
inline constexpr std::array<const char*, 4> kGroupDashes = {"none", "6 3", "2 2", "8 3 2 3"};

}  // namespace detail

/// Unit circle, every group's discs (one stroke style per group), the
/// special point, and optional eigenvalue markers. The imaginary axis points
/// up; the viewBox covers all geometry plus a 10% margin on each side.
inline std::string render_region_svg(const InclusionRegion& region,
                                     const std::vector<Complex>* eigenvalues = nullptr) {
    using detail::num;

    detail::Box box;
    for (const auto& g : region.groups)
        for (const auto& d : g.discs) box.include(d.center.real(), d.center.imag(), d.radius);
    box.include(region.special_point.real(), region.special_point.imag());
    if (eigenvalues)
        for (const auto& z : *eigenvalues) box.include(z.real(), z.imag());

    const double w0 = box.xmax - box.xmin;
    const double h0 = box.ymax - box.ymin;
    const double vx = box.xmin - 0.1 * w0;
    const double vy = -box.ymax - 0.1 * h0;  // SVG y grows downward
    const double vw = 1.2 * w0;
    const double vh = 1.2 * h0;
    const double span = std::max(vw, vh);
    const double dot = 0.006 * span;
    const double mark = 0.015 * span;
    const double px_width = 640.0;
    const double px_height = px_width * vh / vw;

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(px_width) +
         "\" height=\"" + num(px_height) + "\" viewBox=\"" + num(vx) + " " + num(vy) + " " +
         num(vw) + " " + num(vh) + "\">\n";
    s += "<rect x=\"" + num(vx) + "\" y=\"" + num(vy) + "\" width=\"" + num(vw) + "\" height=\"" +
         num(vh) + "\" fill=\"white\"/>\n";
    s += "<g class=\"axes\" stroke=\"#bbbbbb\" vector-effect=\"non-scaling-stroke\" stroke-width=\"1\">\n";
    s += "<line x1=\"" + num(vx) + "\" y1=\"0\" x2=\"" + num(vx + vw) + "\" y2=\"0\" vector-effect=\"non-scaling-stroke\"/>\n";
    s += "<line x1=\"0\" y1=\"" + num(vy) + "\" x2=\"0\" y2=\"" + num(vy + vh) + "\" vector-effect=\"non-scaling-stroke\"/>\n";
    s += "</g>\n";
    s += "<circle class=\"unit-circle\" cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#888888\" "
         "stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";

    for (std::size_t i = 0; i < region.groups.size(); ++i) {
        const auto& g = region.groups[i];
        const char* color = detail::kGroupColors[i % detail::kGroupColors.size()];
        const char* dash = detail::kGroupDashes[(i / detail::kGroupColors.size()) % detail::kGroupDashes.size()];
        s += "<g class=\"group\" id=\"group-" + std::to_string(i + 1) + "\" stroke=\"" + color +
             "\" stroke-dasharray=\"" + dash + "\">\n";
        s += "<title>G_S(" + std::to_string(i + 1) + ")</title>\n";
        for (std::size_t k = 0; k < g.discs.size(); ++k) {
            const auto& d = g.discs[k];
            const std::string common = "cx=\"" + num(d.center.real()) + "\" cy=\"" +
                                       num(-d.center.imag()) + "\" data-label=\"" +
                                       std::to_string(g.labels[k]) + "\"";
            if (d.radius > 0.0) {
                s += "<circle class=\"disc\" " + common + " r=\"" + num(d.radius) + "\" fill=\"" +
                     color + "\" fill-opacity=\"0.08\" stroke-width=\"1.5\" "
                     "vector-effect=\"non-scaling-stroke\"/>\n";
            } else {
                s += "<circle class=\"disc point\" " + common + " r=\"" + num(dot) + "\" fill=\"" +
                     color + "\" stroke=\"none\"/>\n";
            }
        }
        s += "</g>\n";
    }

    const double px = region.special_point.real();
    const double py = -region.special_point.imag();
    s += "<path class=\"special-point\" d=\"M" + num(px - mark) + " " + num(py) + " L" +
         num(px + mark) + " " + num(py) + " M" + num(px) + " " + num(py - mark) + " L" + num(px) +
         " " + num(py + mark) + "\" stroke=\"black\" stroke-width=\"2\" "
         "vector-effect=\"non-scaling-stroke\"/>\n";

    if (eigenvalues) {
        for (const auto& z : *eigenvalues) {
            const double x = z.real();
            const double y = -z.imag();
            s += "<path class=\"eigenvalue\" d=\"M" + num(x - mark) + " " + num(y - mark) + " L" +
                 num(x + mark) + " " + num(y + mark) + " M" + num(x - mark) + " " + num(y + mark) +
                 " L" + num(x + mark) + " " + num(y - mark) + "\" stroke=\"black\" "
                 "stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\"/>\n";
        }
    }
    s += "</svg>\n";
    return s;
}

}  // namespace stochloc
