#pragma once

#include <string>

#include <json.hpp>

#include "balloon/layout.hpp"
#include "balloon/metrics.hpp"
#include "balloon/oracle.hpp"
#include "balloon/tree.hpp"

namespace balloon {

using ordered_json = nlohmann::ordered_json;

// Tree documents: either JSON {"root": id, "nodes": [{"id", "children", ...}]}
// or the compact parenthesized form "(a,(b,c)x,d)" where a bare name is a
// leaf and an optional trailing name labels an inner node (ids "#1", "#2"...
// are synthesized otherwise).
RootedTree parse_tree(const std::string& text);
std::string serialize_tree(const RootedTree& tree);

// Star documents: {"case": "C1".."C4", "children": [{"w0", "w1"}, ...],
// "units": "rad"|"abstract", "meta": {...}}.
struct StarDocument {
    StarInstance instance;
    ordered_json meta;  // round-tripped untouched
};
StarDocument parse_star(const std::string& text);
std::string serialize_star(const StarInstance& star,
                           const ordered_json* meta = nullptr);

// Single solution documents for the verify command.
ordered_json solution_to_json(const Solution& solution);
Solution solution_from_json(const ordered_json& doc, int n_children);

// True when the text looks like a JSON star document rather than a tree.
bool looks_like_star_document(const std::string& text);

// Round a double to 12 significant digits so serialized reports are stable.
double round_sig(double v);

ordered_json metrics_to_json(const MetricsReport& m);

}  // namespace balloon
