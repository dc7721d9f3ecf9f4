#pragma once

#include <string>
#include <vector>

#include "balloon/errors.hpp"

namespace balloon {

struct TreeNode {
    std::string id;
    int parent = -1;
    std::vector<int> children;
    std::string label;
};

// Rooted tree with stored child order. Node ids are unique nonempty strings;
// indices are stable handles into `nodes`.
struct RootedTree {
    std::vector<TreeNode> nodes;
    int root = -1;

    int size() const { return static_cast<int>(nodes.size()); }
    bool is_leaf(int v) const { return nodes[v].children.empty(); }
    int index_of(const std::string& id) const;  // -1 when absent

    // Node indices in post-order (children before parents).
    std::vector<int> post_order() const;
    // Depth of every node (root = 0).
    std::vector<int> depths() const;
};

// Throws InvalidArgumentError unless parent/child links are consistent, ids
// unique, exactly one root, and every node reachable from it.
void validate_tree(const RootedTree& tree);

}  // namespace balloon
