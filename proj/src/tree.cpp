#include "balloon/tree.hpp"

#include <algorithm>
#include <unordered_set>

namespace balloon {

int RootedTree::index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (nodes[i].id == id) return i;
    return -1;
}

std::vector<int> RootedTree::post_order() const {
    std::vector<int> out;
    out.reserve(size());
    // iterative DFS; second visit emits the node
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < nodes[v].children.size()) {
            int c = nodes[v].children[next++];
            stack.push_back({c, 0});
        } else {
            out.push_back(v);
            stack.pop_back();
        }
    }
    return out;
}

std::vector<int> RootedTree::depths() const {
    std::vector<int> d(size(), 0);
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : nodes[v].children) {
            d[c] = d[v] + 1;
            stack.push_back(c);
        }
    }
    return d;
}

void validate_tree(const RootedTree& tree) {
    const int n = tree.size();
    if (n == 0) throw InvalidArgumentError("tree has no nodes");
    if (tree.root < 0 || tree.root >= n)
        throw InvalidArgumentError("tree has no valid root");
    if (tree.nodes[tree.root].parent != -1)
        throw InvalidArgumentError("root must not have a parent");

    std::unordered_set<std::string> ids;
    for (const auto& node : tree.nodes) {
        if (node.id.empty())
            throw InvalidArgumentError("node with empty id");
        if (!ids.insert(node.id).second)
            throw InvalidArgumentError("duplicate node id '" + node.id + "'");
    }

    std::vector<int> seen_parent(n, -2);
    for (int v = 0; v < n; ++v) {
        std::unordered_set<int> kids;
        for (int c : tree.nodes[v].children) {
            if (c < 0 || c >= n)
                throw InvalidArgumentError("child index out of range under '" +
                                           tree.nodes[v].id + "'");
            if (!kids.insert(c).second)
                throw InvalidArgumentError("duplicate child under '" +
                                           tree.nodes[v].id + "'");
            if (tree.nodes[c].parent != v)
                throw InvalidArgumentError("parent link of '" + tree.nodes[c].id +
                                           "' does not match its position");
            seen_parent[c] = v;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (v == tree.root) continue;
        if (seen_parent[v] == -2)
            throw InvalidArgumentError("node '" + tree.nodes[v].id +
                                       "' is not reachable from the root");
    }
    // reachability implies acyclicity here: every non-root has exactly one
    // parent and appears in exactly one child list
    if (tree.post_order().size() != static_cast<size_t>(n))
        throw InvalidArgumentError("tree traversal does not cover all nodes");
}

}  // namespace balloon
