#pragma once

#include <string>

#include "balloon/layout.hpp"
#include "balloon/tree.hpp"

namespace balloon {

struct SvgOptions {
    bool draw_circles = true;   // inner/outer guide circles
    bool draw_wedges = false;   // sub-wedge boundary rays
    bool draw_labels = false;
    double node_dot = 0.03;     // dot radius as a fraction of the drawing size
};

// Deterministic SVG (byte-identical for identical inputs): nodes as dots,
// edges as straight segments, optional guides; the viewBox fits every outer
// circle. Needs a realized (positioned) layout.
std::string emit_svg(const RootedTree& tree, const TreeLayout& layout,
                     const SvgOptions& options = {});

}  // namespace balloon
