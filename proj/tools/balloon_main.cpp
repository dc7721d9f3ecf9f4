#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "balloon/driver.hpp"
#include "balloon/gadgets.hpp"
#include "balloon/io.hpp"
#include "balloon/svg.hpp"

namespace {

using balloon::ordered_json;
using json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitRefusal = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw balloon::ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw balloon::ParseError("cannot open output file '" + path + "'");
    out << content;
}

json outcome_to_json(const balloon::SolveOutcome& outcome,
                     balloon::Problem problem, balloon::CaseTag case_tag) {
    json rec;
    rec["problem"] = balloon::to_string(problem);
    rec["case"] = balloon::to_string(case_tag);
    rec["solver"] = outcome.solution.solver_name;
    rec["optimal"] = outcome.info.exact_used;
    rec["complexity"] = outcome.info.complexity;
    rec["wall_ms"] = balloon::round_sig(outcome.wall_ms);
    rec["sigma"] = outcome.solution.ordering.order;
    rec["t"] = json::array();
    for (auto b : outcome.solution.flips.bits) rec["t"].push_back(int(b));
    rec["metrics"] = balloon::metrics_to_json(outcome.solution.metrics);
    if (outcome.certificate) {
        json c;
        c["c_nd"] = balloon::round_sig(outcome.certificate->c_nd);
        c["c_lb"] = balloon::round_sig(outcome.certificate->c_lb);
        c["c_apx"] = balloon::round_sig(outcome.certificate->c_apx);
        c["eta"] = outcome.certificate->eta;
        rec["certificate"] = std::move(c);
    }
    return rec;
}

// Star instances carry no geometry; for rendering, their solution is drawn
// as a one-level tree on a unit circle.
std::pair<balloon::RootedTree, balloon::TreeLayout> star_drawing(
    const balloon::StarInstance& star, const balloon::Solution& solution) {
    balloon::RootedTree tree;
    tree.nodes.push_back({"c0", -1, {}, ""});
    tree.root = 0;
    for (int i = 0; i < star.n(); ++i) {
        tree.nodes.push_back({"c" + std::to_string(i + 1), 0, {}, ""});
        tree.nodes[0].children.push_back(i + 1);
    }
    balloon::TreeLayout layout;
    layout.nodes.resize(tree.size());
    layout.stars.resize(tree.size());
    layout.nodes[0].inner_radius = 1.0;
    layout.nodes[0].outer_radius = 1.2;
    for (int i = 1; i <= star.n(); ++i) layout.nodes[i].outer_radius = 0.05;
    balloon::StarInstance drawn = star.normalized ? star : balloon::normalize(star);
    drawn.case_tag = star.case_tag;
    layout.stars[0] = drawn;
    std::map<int, balloon::Solution> sols{{0, solution}};
    return {tree, balloon::realize(tree, std::move(layout), sols)};
}

struct CommonOut {
    std::string report_path;
    std::string svg_path;
};

int run_layout(const std::string& input, const std::string& model, double gamma,
               double root_radius, double leaf_radius, bool wedges, bool labels,
               const CommonOut& out) {
    const balloon::RootedTree tree = balloon::parse_tree(read_input(input));
    balloon::TreeLayout layout;
    if (model == "fractal") {
        layout = balloon::fractal_layout(tree, {gamma, root_radius});
    } else {
        layout = balloon::sns_layout(tree, {leaf_radius});
    }
    layout = balloon::realize(tree, std::move(layout), {}, true);

    json rep;
    rep["model"] = model;
    rep["nodes"] = json::array();
    for (int v = 0; v < tree.size(); ++v) {
        json nj;
        nj["id"] = tree.nodes[v].id;
        nj["x"] = balloon::round_sig(layout.nodes[v].position.x);
        nj["y"] = balloon::round_sig(layout.nodes[v].position.y);
        nj["inner_radius"] = balloon::round_sig(layout.nodes[v].inner_radius);
        nj["outer_radius"] = balloon::round_sig(layout.nodes[v].outer_radius);
        rep["nodes"].push_back(std::move(nj));
    }
    if (!out.svg_path.empty()) {
        balloon::SvgOptions opt;
        opt.draw_wedges = wedges;
        opt.draw_labels = labels;
        write_output(out.svg_path, balloon::emit_svg(tree, layout, opt));
    }
    write_output(out.report_path, rep.dump(2) + "\n");
    return 0;
}

json optimize_one(const std::string& text, balloon::Problem problem,
                  bool case_given, balloon::CaseTag case_tag,
                  balloon::SolverChoice choice,
                  const balloon::OracleBudget& budget,
                  const balloon::SnsParams& sns, const std::string& svg_path,
                  bool wedges) {
    balloon::SvgOptions svg_opt;
    svg_opt.draw_wedges = wedges;

    if (balloon::looks_like_star_document(text)) {
        const balloon::StarDocument doc = balloon::parse_star(text);
        balloon::StarInstance star = doc.instance;
        // an explicit --case overrides the document's own tag
        if (case_given) star.case_tag = case_tag;
        balloon::validate_star(star);
        const balloon::SolveOutcome outcome =
            balloon::solve_star(star, problem, choice, budget);
        if (!svg_path.empty()) {
            auto [tree, layout] = star_drawing(star, outcome.solution);
            write_output(svg_path, balloon::emit_svg(tree, layout, svg_opt));
        }
        json rec = outcome_to_json(outcome, problem, star.case_tag);
        rec["input_kind"] = "star";
        return rec;
    }

    const balloon::RootedTree tree = balloon::parse_tree(text);
    balloon::OptimizeOptions opts;
    opts.problem = problem;
    opts.case_tag = case_tag;
    opts.solver = choice;
    opts.budget = budget;
    opts.sns = sns;
    balloon::TreeOptimizeResult result = balloon::optimize_tree(tree, opts);
    if (!svg_path.empty())
        write_output(svg_path, balloon::emit_svg(tree, result.layout, svg_opt));

    json rep;
    rep["input_kind"] = "tree";
    // drawing-level quality: worst node wins each measure
    if (!result.per_node.empty()) {
        double resl = std::numeric_limits<double>::infinity();
        double ratio = 1.0, dev = 0.0;
        bool ratio_inf = false;
        for (const auto& node : result.per_node) {
            const auto& m = node.outcome.solution.metrics;
            resl = std::min(resl, m.ang_resl);
            ratio_inf = ratio_inf || m.asp_ratio_infinite;
            if (!m.asp_ratio_infinite) ratio = std::max(ratio, m.asp_ratio);
            dev = std::max(dev, m.std_dev);
        }
        json agg;
        agg["ang_resl"] = balloon::round_sig(resl);
        if (ratio_inf)
            agg["asp_ratio"] = "inf";
        else
            agg["asp_ratio"] = balloon::round_sig(ratio);
        agg["std_dev"] = balloon::round_sig(dev);
        rep["drawing"] = std::move(agg);
    }
    rep["nodes"] = json::array();
    for (const auto& node : result.per_node) {
        json rec = outcome_to_json(node.outcome, problem, case_tag);
        rec["node"] = tree.nodes[node.node].id;
        rep["nodes"].push_back(std::move(rec));
    }
    return rep;
}

int run_verify(const std::string& instance_path, const std::string& solution_path,
               const std::string& out_path) {
    const balloon::StarDocument doc = balloon::parse_star(read_input(instance_path));
    json sol_doc;
    try {
        sol_doc = json::parse(read_input(solution_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw balloon::ParseError(std::string("invalid solution JSON: ") + e.what());
    }
    const balloon::StarInstance& star = doc.instance;
    const balloon::Solution stated =
        balloon::solution_from_json(sol_doc, star.n());

    json diffs = json::array();
    auto flag = [&](const std::string& field, const json& want, const json& got) {
        json d;
        d["field"] = field;
        d["stated"] = got;
        d["recomputed"] = want;
        diffs.push_back(std::move(d));
    };

    if (!balloon::is_permutation(stated.ordering, star.n())) {
        flag("sigma", "a permutation of 0.." + std::to_string(star.n() - 1),
             stated.ordering.order);
    } else if (stated.flips.size() != star.n()) {
        flag("t", "one bit per child", sol_doc.value("t", json::array()));
    } else {
        const balloon::MetricsReport fresh =
            balloon::compute_metrics(star, stated.ordering, stated.flips);
        const double tol = 1e-9;
        auto close = [&](double a, double b) { return std::abs(a - b) <= tol; };
        if (fresh.angles.size() == stated.metrics.angles.size()) {
            for (size_t i = 0; i < fresh.angles.size(); ++i)
                if (!close(fresh.angles[i], stated.metrics.angles[i]))
                    flag("angles[" + std::to_string(i) + "]",
                         balloon::round_sig(fresh.angles[i]),
                         balloon::round_sig(stated.metrics.angles[i]));
        } else if (!stated.metrics.angles.empty()) {
            flag("angles", "one angle per child", stated.metrics.angles);
        }
        if (!close(fresh.ang_resl, stated.metrics.ang_resl))
            flag("ang_resl", balloon::round_sig(fresh.ang_resl),
                 balloon::round_sig(stated.metrics.ang_resl));
        if (fresh.asp_ratio_infinite != stated.metrics.asp_ratio_infinite ||
            (!fresh.asp_ratio_infinite &&
             !close(fresh.asp_ratio, stated.metrics.asp_ratio)))
            flag("asp_ratio", balloon::round_sig(fresh.asp_ratio),
                 balloon::round_sig(stated.metrics.asp_ratio));
        if (!close(fresh.std_dev, stated.metrics.std_dev))
            flag("std_dev", balloon::round_sig(fresh.std_dev),
                 balloon::round_sig(stated.metrics.std_dev));
        if (!close(fresh.sop, stated.metrics.sop))
            flag("sop", balloon::round_sig(fresh.sop),
                 balloon::round_sig(stated.metrics.sop));
    }

    json rep;
    rep["pass"] = diffs.empty();
    rep["diffs"] = diffs;
    write_output(out_path, rep.dump(2) + "\n");
    return diffs.empty() ? 0 : 1;
}

int run_gadget(const std::string& kind, const std::string& input, int random_n,
               std::uint64_t seed, const std::string& out_path) {
    json doc;
    if (random_n <= 0) doc = json::parse(read_input(input));
    if (kind == "ra4-from-2slw") {
        balloon::TwoStationInstance tsi;
        if (random_n > 0) {
            tsi = balloon::random_two_station(random_n, seed);
            doc["jobs"] = json::array();
            for (const auto& j : tsi.jobs) doc["jobs"].push_back({j[0], j[1]});
            doc["lb"] = tsi.lb;
            doc["ub"] = tsi.ub;
            doc["seed"] = seed;
        } else {
            for (const auto& j : doc.at("jobs"))
                tsi.jobs.push_back({j.at(0).get<double>(), j.at(1).get<double>()});
            tsi.lb = doc.at("lb").get<double>();
            tsi.ub = doc.at("ub").get<double>();
        }
        const balloon::Ra4Gadget g = balloon::gen_ra4_from_2slw(tsi);
        json meta;
        meta["kind"] = "ra4-from-2slw";
        meta["angle_lo"] = balloon::round_sig(g.angle_lo);
        meta["angle_hi"] = balloon::round_sig(g.angle_hi);
        meta["rho"] = balloon::round_sig(g.rho);
        meta["w_max"] = balloon::round_sig(g.w_max);
        meta["source"] = doc;
        write_output(out_path, balloon::serialize_star(g.instance, &meta));
        return 0;
    }
    if (kind == "de4-from-cubic") {
        balloon::CubicGraph g;
        if (random_n > 0) {
            g = balloon::random_cubic_graph(random_n, seed);
            doc["n"] = g.n;
            doc["edges"] = json::array();
            for (int v = 0; v < g.n; ++v)
                for (int w : g.neighbors[v])
                    if (v < w) doc["edges"].push_back({v, w});
            doc["seed"] = seed;
        } else {
            std::vector<std::pair<int, int>> edges;
            for (const auto& e : doc.at("edges"))
                edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
            g = balloon::CubicGraph::from_edges(doc.at("n").get<int>(), edges);
        }
        const balloon::De4Gadget gadget = balloon::gen_de4_from_cubic(g);
        json meta;
        meta["kind"] = "de4-from-cubic";
        meta["ub"] = gadget.ub;
        meta["blocks"] = gadget.blocks();
        meta["source"] = doc;
        write_output(out_path, balloon::serialize_star(gadget.instance, &meta));
        return 0;
    }
    throw balloon::ParseError("unknown gadget kind '" + kind +
                              "' (expected ra4-from-2slw or de4-from-cubic)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balloon drawings of rooted trees: layout, angle optimization, "
                 "verification, and hardness-instance generation"};
    app.require_subcommand(1);

    std::string input, report_path, svg_path;
    std::string model = "sns", problem_s = "re", case_s = "c1", solver_s = "auto";
    double gamma = 0.5, root_radius = 1.0, leaf_radius = 1.0;
    bool wedges = false, labels = false;
    int jobs = 1;
    balloon::OracleBudget budget;

    auto* layout_cmd = app.add_subcommand("layout", "compute a balloon layout and render it");
    layout_cmd->add_option("input", input, "tree file (JSON or parenthesized), '-' for stdin")
        ->required();
    layout_cmd->add_option("--model", model, "sns or fractal")
        ->check(CLI::IsMember({"sns", "fractal"}));
    layout_cmd->add_option("--gamma", gamma, "fractal shrink ratio in (0,1)");
    layout_cmd->add_option("--root-radius", root_radius, "fractal depth-1 edge length base");
    layout_cmd->add_option("--leaf-radius", leaf_radius, "SNS leaf circle radius");
    layout_cmd->add_option("--svg", svg_path, "write an SVG rendering here");
    layout_cmd->add_option("--out", report_path, "report path (default stdout)");
    layout_cmd->add_flag("--wedges", wedges, "draw sub-wedge guides");
    layout_cmd->add_flag("--labels", labels, "draw node ids");

    std::vector<std::string> opt_inputs;
    auto* opt_cmd = app.add_subcommand("optimize", "optimize angles of a star or a whole tree");
    opt_cmd->add_option("inputs", opt_inputs, "star/tree files, '-' for stdin")
        ->required();
    opt_cmd->add_option("--problem", problem_s, "re | ra | de | sop")
        ->check(CLI::IsMember({"re", "ra", "de", "sop"}));
    auto* case_opt =
        opt_cmd->add_option("--case", case_s,
                            "c1 | c2 | c3 | c4 (default: the star document's "
                            "case, or c1 for trees)")
            ->check(CLI::IsMember({"c1", "c2", "c3", "c4"}));
    opt_cmd->add_option("--solver", solver_s, "auto | exact | approx | oracle")
        ->check(CLI::IsMember({"auto", "exact", "approx", "oracle"}));
    opt_cmd->add_option("--oracle-max-children", budget.max_children,
                        "exhaustive-solver child limit");
    opt_cmd->add_option("--oracle-max-states", budget.max_states,
                        "exhaustive-solver state limit");
    opt_cmd->add_option("--leaf-radius", leaf_radius, "SNS leaf circle radius");
    opt_cmd->add_option("--svg", svg_path, "write an SVG of the optimized drawing");
    opt_cmd->add_option("--out", report_path, "report path (default stdout)");
    opt_cmd->add_option("--jobs", jobs, "worker threads for several inputs")
        ->check(CLI::PositiveNumber);
    opt_cmd->add_flag("--wedges", wedges, "draw sub-wedge guides");

    std::string sol_path;
    auto* verify_cmd = app.add_subcommand("verify", "recheck a solution against its instance");
    verify_cmd->add_option("instance", input, "star instance file")->required();
    verify_cmd->add_option("solution", sol_path, "solution file")->required();
    verify_cmd->add_option("--out", report_path, "report path (default stdout)");

    std::string gadget_kind;
    int gadget_random = 0;
    std::uint64_t gadget_seed = 1;
    auto* gadget_cmd = app.add_subcommand("gadget", "generate a hardness test instance");
    gadget_cmd->add_option("kind", gadget_kind, "ra4-from-2slw | de4-from-cubic")
        ->required();
    auto* gadget_input =
        gadget_cmd->add_option("input", input, "jobs file or cubic-graph file");
    gadget_cmd
        ->add_option("--random", gadget_random,
                     "synthesize a random source of this size instead of "
                     "reading a file")
        ->excludes(gadget_input);
    gadget_cmd->add_option("--seed", gadget_seed, "seed for --random");
    gadget_cmd->add_option("--out", report_path, "star document path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (layout_cmd->parsed())
            return run_layout(input, model, gamma, root_radius, leaf_radius,
                              wedges, labels, {report_path, svg_path});
        if (opt_cmd->parsed()) {
            const auto problem = *balloon::problem_from_string(problem_s);
            const auto case_tag = *balloon::case_from_string(case_s);
            const auto choice = *balloon::solver_from_string(solver_s);
            balloon::SnsParams sns{leaf_radius};

            std::vector<std::string> texts(opt_inputs.size());
            for (size_t i = 0; i < opt_inputs.size(); ++i)
                texts[i] = read_input(opt_inputs[i]);

            std::vector<json> records(opt_inputs.size());
            if (opt_inputs.size() == 1) {
                records[0] =
                    optimize_one(texts[0], problem, case_opt->count() > 0,
                                 case_tag, choice, budget, sns, svg_path, wedges);
            } else {
                if (!svg_path.empty())
                    throw balloon::InvalidArgumentError(
                        "--svg works with a single input");
                std::exception_ptr first_error;
                std::mutex error_mutex;
                std::atomic<size_t> next{0};
                auto worker = [&]() {
                    for (size_t i = next.fetch_add(1); i < texts.size();
                         i = next.fetch_add(1)) {
                        try {
                            records[i] = optimize_one(
                                texts[i], problem, case_opt->count() > 0,
                                case_tag, choice, budget, sns, "", false);
                        } catch (...) {
                            std::lock_guard lock(error_mutex);
                            if (!first_error) first_error = std::current_exception();
                        }
                    }
                };
                std::vector<std::thread> pool;
                const int nthreads =
                    std::min<size_t>(jobs, texts.size());
                for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
                for (auto& th : pool) th.join();
                if (first_error) std::rethrow_exception(first_error);
            }

            json rep;
            if (records.size() == 1) {
                rep = std::move(records[0]);
            } else {
                rep = json::array();
                for (size_t i = 0; i < records.size(); ++i) {
                    records[i]["input"] = opt_inputs[i];
                    rep.push_back(std::move(records[i]));
                }
            }
            write_output(report_path, rep.dump(2) + "\n");
            return 0;
        }
        if (verify_cmd->parsed()) return run_verify(input, sol_path, report_path);
        if (gadget_cmd->parsed()) {
            if (gadget_random <= 0 && gadget_input->count() == 0)
                throw balloon::InvalidArgumentError(
                    "gadget needs an input file or --random N");
            return run_gadget(gadget_kind, input, gadget_random, gadget_seed,
                              report_path);
        }
    } catch (const balloon::SolverRefusalError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const balloon::ParseError& e) {
        std::cerr << "input error";
        if (e.line > 0) std::cerr << " at line " << e.line << ", column " << e.column;
        std::cerr << ": " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const balloon::InvalidArgumentError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const balloon::DegenerateInstanceError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const balloon::BudgetExceededError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
