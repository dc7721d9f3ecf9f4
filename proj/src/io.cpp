#include "balloon/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace balloon {

namespace {

using json = nlohmann::ordered_json;

// --- compact parenthesized tree format ------------------------------------

struct ParenParser {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;
    RootedTree tree;
    int synth = 0;

    explicit ParenParser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, line, col);
    }
    int peek() const { return pos < text.size() ? text[pos] : -1; }
    int get() {
        if (pos >= text.size()) return -1;
        const char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            get();
    }
    static bool name_char(int c) {
        return std::isalnum(c) || c == '_' || c == '.' || c == '-';
    }
    std::string read_name() {
        std::string s;
        while (name_char(peek())) s.push_back(static_cast<char>(get()));
        return s;
    }

    int new_node(std::string id) {
        if (id.empty()) id = "#" + std::to_string(++synth);
        tree.nodes.push_back({});
        tree.nodes.back().id = std::move(id);
        return tree.size() - 1;
    }

    int parse_node() {
        skip_ws();
        if (peek() == '(') {
            get();
            std::vector<int> kids;
            kids.push_back(parse_node());
            skip_ws();
            while (peek() == ',') {
                get();
                kids.push_back(parse_node());
                skip_ws();
            }
            if (peek() != ')') fail("expected ',' or ')'");
            get();
            skip_ws();
            const int v = new_node(read_name());
            for (int c : kids) {
                tree.nodes[c].parent = v;
                tree.nodes[v].children.push_back(c);
            }
            return v;
        }
        const std::string name = read_name();
        if (name.empty()) fail("expected a node name or '('");
        return new_node(name);
    }

    RootedTree run() {
        tree.root = parse_node();
        skip_ws();
        if (peek() == ';') get();  // optional terminator
        skip_ws();
        if (pos != text.size()) fail("trailing input after the tree");
        return tree;
    }
};

json parse_json_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ParseError(std::string("missing numeric field '") + key + "'");
    return j[key].get<double>();
}

}  // namespace

RootedTree parse_tree(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty input");
    if (text[first] != '{') {
        ParenParser parser(text);
        RootedTree tree = parser.run();
        validate_tree(tree);
        return tree;
    }

    const json doc = parse_json_or_throw(text);
    if (!doc.contains("nodes") || !doc["nodes"].is_array())
        throw ParseError("tree document needs a 'nodes' array");
    if (!doc.contains("root") || !doc["root"].is_string())
        throw ParseError("tree document needs a string 'root'");

    RootedTree tree;
    std::vector<std::vector<std::string>> child_ids;
    for (const auto& nj : doc["nodes"]) {
        if (!nj.contains("id") || !nj["id"].is_string())
            throw ParseError("every node needs a string 'id'");
        TreeNode node;
        node.id = nj["id"].get<std::string>();
        if (nj.contains("label")) node.label = nj["label"].get<std::string>();
        if (tree.index_of(node.id) >= 0)
            throw ParseError("duplicate node id '" + node.id + "'");
        tree.nodes.push_back(std::move(node));
        std::vector<std::string> kids;
        if (nj.contains("children")) {
            if (!nj["children"].is_array())
                throw ParseError("'children' must be an array of ids");
            for (const auto& c : nj["children"]) kids.push_back(c.get<std::string>());
        }
        child_ids.push_back(std::move(kids));
    }
    tree.root = tree.index_of(doc["root"].get<std::string>());
    if (tree.root < 0)
        throw ParseError("root id '" + doc["root"].get<std::string>() +
                         "' is not a node");
    for (int v = 0; v < tree.size(); ++v) {
        for (const auto& cid : child_ids[v]) {
            const int c = tree.index_of(cid);
            if (c < 0)
                throw ParseError("unknown child id '" + cid + "' under '" +
                                 tree.nodes[v].id + "'");
            if (tree.nodes[c].parent != -1)
                throw ParseError("node '" + cid + "' has two parents");
            tree.nodes[c].parent = v;
            tree.nodes[v].children.push_back(c);
        }
    }
    try {
        validate_tree(tree);
    } catch (const InvalidArgumentError& e) {
        throw ParseError(e.what());
    }
    return tree;
}

std::string serialize_tree(const RootedTree& tree) {
    json doc;
    doc["root"] = tree.nodes[tree.root].id;
    doc["nodes"] = json::array();
    for (const auto& node : tree.nodes) {
        json nj;
        nj["id"] = node.id;
        nj["children"] = json::array();
        for (int c : node.children) nj["children"].push_back(tree.nodes[c].id);
        if (!node.label.empty()) nj["label"] = node.label;
        doc["nodes"].push_back(std::move(nj));
    }
    return doc.dump(2) + "\n";
}

double round_sig(double v) {
    if (v == 0.0 || !std::isfinite(v)) return v;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

StarDocument parse_star(const std::string& text) {
    const json doc = parse_json_or_throw(text);
    StarDocument out;
    if (!doc.contains("case") || !doc["case"].is_string())
        throw ParseError("star document needs a 'case' (C1..C4)");
    auto tag = case_from_string(doc["case"].get<std::string>());
    if (!tag) throw ParseError("unknown case '" + doc["case"].get<std::string>() + "'");
    out.instance.case_tag = *tag;
    if (!doc.contains("children") || !doc["children"].is_array() ||
        doc["children"].empty())
        throw ParseError("star document needs a nonempty 'children' array");
    for (const auto& cj : doc["children"])
        out.instance.children.push_back(
            {require_number(cj, "w0"), require_number(cj, "w1")});
    std::string units = doc.value("units", std::string("abstract"));
    if (units != "rad" && units != "abstract")
        throw ParseError("units must be 'rad' or 'abstract'");
    out.instance.normalized =
        units == "rad" &&
        std::abs(out.instance.total() - kTwoPi) <= kAngleTol;
    if (doc.contains("meta")) out.meta = doc["meta"];
    try {
        validate_star(out.instance);
    } catch (const InvalidArgumentError& e) {
        throw ParseError(e.what());
    }
    return out;
}

std::string serialize_star(const StarInstance& star, const ordered_json* meta) {
    json doc;
    doc["case"] = to_string(star.case_tag);
    doc["units"] = star.normalized ? "rad" : "abstract";
    doc["children"] = json::array();
    for (const auto& c : star.children) {
        json cj;
        cj["w0"] = round_sig(c.w0);
        cj["w1"] = round_sig(c.w1);
        doc["children"].push_back(std::move(cj));
    }
    if (meta && !meta->is_null()) doc["meta"] = *meta;
    return doc.dump(2) + "\n";
}

ordered_json metrics_to_json(const MetricsReport& m) {
    json mj;
    mj["angles"] = json::array();
    for (double a : m.angles) mj["angles"].push_back(round_sig(a));
    mj["ang_resl"] = round_sig(m.ang_resl);
    if (m.asp_ratio_infinite)
        mj["asp_ratio"] = "inf";
    else
        mj["asp_ratio"] = round_sig(m.asp_ratio);
    mj["asp_ratio_infinite"] = m.asp_ratio_infinite;
    mj["std_dev"] = round_sig(m.std_dev);
    mj["sop"] = round_sig(m.sop);
    return mj;
}

ordered_json solution_to_json(const Solution& solution) {
    json doc;
    doc["solver"] = solution.solver_name;
    doc["optimal"] = solution.claims_optimal;
    doc["sigma"] = solution.ordering.order;
    doc["t"] = json::array();
    for (auto b : solution.flips.bits) doc["t"].push_back(static_cast<int>(b));
    doc["metrics"] = metrics_to_json(solution.metrics);
    return doc;
}

Solution solution_from_json(const ordered_json& doc, int n_children) {
    Solution s;
    if (!doc.contains("sigma") || !doc["sigma"].is_array())
        throw ParseError("solution needs a 'sigma' array");
    for (const auto& v : doc["sigma"]) s.ordering.order.push_back(v.get<int>());
    if (doc.contains("t"))
        for (const auto& v : doc["t"])
            s.flips.bits.push_back(static_cast<std::uint8_t>(v.get<int>()));
    else
        s.flips = FlipAssignment::zeros(n_children);
    s.solver_name = doc.value("solver", std::string("unknown"));
    s.claims_optimal = doc.value("optimal", false);
    if (doc.contains("metrics")) {
        const auto& mj = doc["metrics"];
        if (mj.contains("angles"))
            for (const auto& a : mj["angles"])
                s.metrics.angles.push_back(a.get<double>());
        s.metrics.ang_resl = mj.value("ang_resl", 0.0);
        if (mj.contains("asp_ratio") && mj["asp_ratio"].is_number())
            s.metrics.asp_ratio = mj["asp_ratio"].get<double>();
        s.metrics.asp_ratio_infinite = mj.value("asp_ratio_infinite", false);
        if (s.metrics.asp_ratio_infinite)
            s.metrics.asp_ratio = std::numeric_limits<double>::infinity();
        s.metrics.std_dev = mj.value("std_dev", 0.0);
        s.metrics.sop = mj.value("sop", 0.0);
    }
    return s;
}

bool looks_like_star_document(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') return false;
    try {
        const json doc = json::parse(text);
        return doc.contains("children") && doc.contains("case");
    } catch (...) {
        return false;
    }
}

}  // namespace balloon
