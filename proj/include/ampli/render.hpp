#pragma once

// SVG figure emitter for m = 2 contexts: the projected points Z_i, the
// polygon edges S(i,i+1) and S(n,1), and the origin of V_Y. Plane
// coordinates come from two fixed twistor functionals, so the drawing is a
// linear image of V_Y; doubles are used for layout only.

#include "ampli/errors.hpp"
#include "ampli/twistor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace ampli {

inline std::string render_svg_m2(const TwistorContext& ctx) {
    if (ctx.m() != 2) throw ContractError("render needs m = 2");
    const int n = ctx.n();
    // Anchor pair (a, b): coordinates are (<Y,i,b>, <Y,a,i>), a frame of V_Y
    // whenever Z_a and Z_b are independent, i.e. <Y,a,b> != 0.
    int a = 1, b = n;
    if (twistor(ctx, {a, b}) == 0) {
        bool found = false;
        for (int cand = 2; cand <= n && !found; ++cand)
            if (twistor(ctx, {1, cand}) != 0) {
                b = cand;
                found = true;
            }
        if (!found) throw DegenerateInputError("no nondegenerate anchor pair for rendering");
    }
    std::vector<double> xs(n), ys(n);
    for (int i = 1; i <= n; ++i) {
        xs[i - 1] = static_cast<double>(twistor(ctx, {i, b}));
        ys[i - 1] = static_cast<double>(twistor(ctx, {a, i}));
    }
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    for (int i = 0; i < n; ++i) {
        lo_x = std::min(lo_x, xs[i]);
        hi_x = std::max(hi_x, xs[i]);
        lo_y = std::min(lo_y, ys[i]);
        hi_y = std::max(hi_y, ys[i]);
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double view = 640.0, margin = 60.0;
    const double scale = (view - 2 * margin) / span;
    auto px = [&](double x) { return margin + (x - lo_x) * scale; };
    auto py = [&](double y) { return view - margin - (y - lo_y) * scale; };
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3f", v);
        return std::string(buf);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    svg << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
    auto edge = [&](int i, int j) {
        svg << "<line x1=\"" << fmt(px(xs[i - 1])) << "\" y1=\"" << fmt(py(ys[i - 1]))
            << "\" x2=\"" << fmt(px(xs[j - 1])) << "\" y2=\"" << fmt(py(ys[j - 1]))
            << "\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
    };
    for (int i = 1; i < n; ++i) edge(i, i + 1);
    edge(n, 1);
    for (int i = 1; i <= n; ++i) {
        svg << "<circle cx=\"" << fmt(px(xs[i - 1])) << "\" cy=\"" << fmt(py(ys[i - 1]))
            << "\" r=\"4\" fill=\"black\"/>\n";
        svg << "<text x=\"" << fmt(px(xs[i - 1]) + 7) << "\" y=\"" << fmt(py(ys[i - 1]) - 7)
            << "\" font-size=\"14\" font-family=\"sans-serif\">Z" << i << "</text>\n";
    }
    svg << "<circle cx=\"" << fmt(px(0)) << "\" cy=\"" << fmt(py(0))
        << "\" r=\"5\" fill=\"none\" stroke=\"crimson\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << fmt(px(0) + 8) << "\" y=\"" << fmt(py(0) + 14)
        << "\" font-size=\"14\" font-family=\"sans-serif\" fill=\"crimson\">0</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace ampli
