#pragma once

#include <random>
#include <vector>

#include "balloon/star.hpp"
#include "balloon/tree.hpp"

namespace balloon::testutil {

using Rng = std::mt19937_64;

// uniform draw from (0, 1]
inline double unit_open(Rng& rng) {
    std::uniform_real_distribution<double> d(0.0, 1.0);
    return 1.0 - d(rng);
}

inline StarInstance random_star(CaseTag tag, int n, Rng& rng,
                                bool normalized = true) {
    StarInstance star;
    star.case_tag = tag;
    for (int i = 0; i < n; ++i) {
        if (tag == CaseTag::C1) {
            const double w = unit_open(rng);
            star.children.push_back({w, w});
        } else {
            star.children.push_back({unit_open(rng), unit_open(rng)});
        }
    }
    return normalized ? normalize(star) : star;
}

// The four-job two-station example: jobs (2,3), (1,7), (6,2), (4,2); the
// order 3,2,4,1 yields period loads 3, 11, 4, 9.
inline StarInstance four_job_star(CaseTag tag = CaseTag::C3) {
    StarInstance star;
    star.case_tag = tag;
    star.children = {{2, 3}, {1, 7}, {6, 2}, {4, 2}};
    return star;
}

// 1-based convenience for orderings written in math style.
inline CircularOrdering sigma1(std::initializer_list<int> order) {
    CircularOrdering s;
    for (int v : order) s.order.push_back(v - 1);
    return s;
}

inline RootedTree random_tree(int max_nodes, Rng& rng) {
    const int n = 1 + static_cast<int>(rng() % max_nodes);
    RootedTree tree;
    tree.nodes.push_back({"n0", -1, {}, ""});
    tree.root = 0;
    for (int v = 1; v < n; ++v) {
        const int parent = static_cast<int>(rng() % v);
        tree.nodes.push_back({"n" + std::to_string(v), parent, {}, ""});
        tree.nodes[parent].children.push_back(v);
    }
    return tree;
}

}  // namespace balloon::testutil
