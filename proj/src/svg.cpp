#include "balloon/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace balloon {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void attr(std::string& out, const char* name, const std::string& value) {
    out += ' ';
    out += name;
    out += "=\"";
    out += value;
    out += '"';
}

}  // namespace

std::string emit_svg(const RootedTree& tree, const TreeLayout& layout,
                     const SvgOptions& options) {
    if (!layout.positioned)
        throw InvalidArgumentError("layout must be realized before rendering");

    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    for (int v = 0; v < tree.size(); ++v) {
        const auto& ln = layout.nodes[v];
        min_x = std::min(min_x, ln.position.x - ln.outer_radius);
        max_x = std::max(max_x, ln.position.x + ln.outer_radius);
        min_y = std::min(min_y, ln.position.y - ln.outer_radius);
        max_y = std::max(max_y, ln.position.y + ln.outer_radius);
    }
    const double pad = 0.05 * std::max(max_x - min_x, max_y - min_y) + 1e-9;
    min_x -= pad;
    min_y -= pad;
    max_x += pad;
    max_y += pad;
    const double span = std::max(max_x - min_x, max_y - min_y);
    const double dot = options.node_dot * span;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\"";
    attr(out, "viewBox", num(min_x) + " " + num(min_y) + " " +
                             num(max_x - min_x) + " " + num(max_y - min_y));
    out += ">\n";

    if (options.draw_circles) {
        for (int v = 0; v < tree.size(); ++v) {
            const auto& ln = layout.nodes[v];
            if (tree.is_leaf(v) && ln.outer_radius <= 0.0) continue;
            out += "  <circle";
            attr(out, "cx", num(ln.position.x));
            attr(out, "cy", num(ln.position.y));
            attr(out, "r", num(ln.outer_radius));
            attr(out, "fill", "none");
            attr(out, "stroke", "#c8c8c8");
            attr(out, "stroke-width", num(span * 0.002));
            out += "/>\n";
        }
    }
    if (options.draw_wedges) {
        for (int v = 0; v < tree.size(); ++v) {
            if (v == tree.root) continue;
            const auto& ln = layout.nodes[v];
            const auto& pl = layout.nodes[tree.nodes[v].parent];
            for (double a : {ln.wedge_start, ln.wedge_end}) {
                out += "  <line";
                attr(out, "x1", num(pl.position.x));
                attr(out, "y1", num(pl.position.y));
                attr(out, "x2", num(pl.position.x + std::cos(a) * ln.edge_length));
                attr(out, "y2", num(pl.position.y + std::sin(a) * ln.edge_length));
                attr(out, "stroke", "#e0b0b0");
                attr(out, "stroke-width", num(span * 0.0015));
                out += "/>\n";
            }
        }
    }
    for (int v = 0; v < tree.size(); ++v) {
        if (v == tree.root) continue;
        const auto& ln = layout.nodes[v];
        const auto& pl = layout.nodes[tree.nodes[v].parent];
        out += "  <line";
        attr(out, "x1", num(pl.position.x));
        attr(out, "y1", num(pl.position.y));
        attr(out, "x2", num(ln.position.x));
        attr(out, "y2", num(ln.position.y));
        attr(out, "stroke", "#303030");
        attr(out, "stroke-width", num(span * 0.004));
        out += "/>\n";
    }
    for (int v = 0; v < tree.size(); ++v) {
        const auto& ln = layout.nodes[v];
        out += "  <circle";
        attr(out, "cx", num(ln.position.x));
        attr(out, "cy", num(ln.position.y));
        attr(out, "r", num(dot));
        attr(out, "fill", "#1f4e79");
        out += "/>\n";
        if (options.draw_labels) {
            out += "  <text";
            attr(out, "x", num(ln.position.x + dot * 1.5));
            attr(out, "y", num(ln.position.y - dot * 1.5));
            attr(out, "font-size", num(dot * 4.0));
            out += ">";
            out += tree.nodes[v].id;
            out += "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace balloon
