#pragma once

#include <map>
#include <optional>
#include <span>

#include "balloon/metrics.hpp"
#include "balloon/tree.hpp"

namespace balloon {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct LayoutNode {
    Vec2 position;
    double inner_radius = 0.0;   // r: circle its children sit on (0 for leaves)
    double outer_radius = 0.0;   // R: circle enclosing the whole subtree
    double free_arc = 0.0;
    double ray_angle = 0.0;      // absolute direction parent -> this node
    double wedge_start = 0.0;    // absolute wedge bounds after realize()
    double wedge_end = 0.0;
    double edge_length = 0.0;    // distance to parent (0 at the root)
};

struct TreeLayout {
    std::vector<LayoutNode> nodes;            // by tree node index
    std::vector<std::optional<StarInstance>> stars;  // even star per internal node
    bool positioned = false;
};

struct SnsParams {
    double leaf_radius = 1.0;
};

// Bottom-up balloon layout with per-child circle sizes. For each internal
// node the inner radius is the smallest r >= (sum of child outer radii)/pi
// such that every child's outer circle fits inside its even wedge
// (asin(R_i/r) <= (R_i + free_arc/2)/r); the leftover circumference is
// distributed as n equal free arcs. Fitting inside disjoint wedges keeps all
// sibling circles pairwise disjoint. Emits the even star per internal node.
TreeLayout sns_layout(const RootedTree& tree, const SnsParams& params = {});

struct FractalParams {
    double gamma = 0.5;        // per-level shrink ratio, in (0,1)
    double root_radius = 1.0;
};

// Every edge at depth m has length gamma^m * root_radius; children are spread
// evenly around their parent.
TreeLayout fractal_layout(const RootedTree& tree, const FractalParams& params);

// Tight sub-wedge minima for the children of `node` under an SNS layout:
// each side of child i needs asin(R_i / r) to cover its circle.
std::vector<SubWedgePair> tight_sub_wedges(const RootedTree& tree,
                                           const TreeLayout& layout, int node);

// Reduces each sub-wedge to the caller's tight angle (never increasing it):
// out = min(in, minimum). Keeps evenness when both inputs are even.
StarInstance shrink_to_uneven(const StarInstance& even_star,
                              std::span<const SubWedgePair> minima);

// Assigns absolute positions: root at the origin, first drawn child of every
// node at local angle 0, subsequent rays advancing by the drawn angles, and
// each child frame rotated to its incoming ray. `solutions` supplies the
// drawn order/flips per internal node; missing entries fall back to stored
// order when allow_identity is set, otherwise raise an error naming the node.
TreeLayout realize(const RootedTree& tree, TreeLayout layout,
                   const std::map<int, Solution>& solutions,
                   bool allow_identity = false);

}  // namespace balloon
