// Command line front end: traverse, compare, bench, gen, export, validate.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 no path.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "graphsearch/gen.hpp"
#include "graphsearch/graph.hpp"
#include "graphsearch/hdbms.hpp"
#include "graphsearch/metrics.hpp"
#include "graphsearch/search.hpp"

using namespace graphsearch;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw GraphError("cannot open output file: " + out_path);
    out << text;
}

Direction parse_direction(const std::string& s) {
    if (s == "directed") return Direction::directed;
    if (s == "undirected") return Direction::undirected;
    throw UsageError("--direction must be directed or undirected");
}

SelectionPolicy parse_policy(const std::string& s) {
    if (s == "similarity") return SelectionPolicy::similarity;
    if (s == "max_weight") return SelectionPolicy::max_weight;
    throw UsageError("--policy must be similarity or max_weight");
}

std::string format_traversal(const TraversalResult& r, bool weighted) {
    std::string out;
    for (std::size_t i = 0; i < r.order.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(r.order[i].first);
        if (weighted) out += " (" + format_weight(r.order[i].second) + ")";
    }
    return out;
}

std::string format_path(const PathResult& r) {
    std::string out;
    for (std::size_t i = 0; i < r.path.size(); ++i) {
        if (i) out += " -> ";
        out += std::to_string(r.path[i]);
    }
    out += "\ncost " + format_weight(r.cost) + ", expanded " + std::to_string(r.expanded_count);
    return out;
}

Heuristic load_heuristic(const std::string& path) {
    Heuristic h;
    if (path.empty()) return h;
    std::istringstream in(read_file(path));
    NodeId id;
    double est;
    while (in >> id >> est) {
        if (est < 0) throw GraphError("heuristic estimates must be >= 0");
        h.estimates[id] = est;
    }
    return h;
}

struct Options {
    std::string input, out_path, heuristic_path;
    NodeId root = 1, goal = 1;
    std::string algo = "bfs", policy = "similarity", direction = "directed";
    std::string cost = "unit", format = "text", style = "plain", algos = "bfs,dfs,hdbms";
    std::optional<double> tau;
    std::string tau_schedule = "fixed";
    bool no_timing = false;
    std::size_t repetitions = 100, warmup = 10;

    // gen
    std::string kind = "er";
    std::size_t n = 10, m = 2, levels = 2, width = 2;
    double p = 0.1;
    std::uint64_t seed = 0;
    std::string weight_dist = "uniform01";
    double fixed_value = 0.5;
};

HdbmsConfig hdbms_config(const Options& opt) {
    HdbmsConfig cfg;
    cfg.policy = parse_policy(opt.policy);
    cfg.direction = parse_direction(opt.direction);
    cfg.tau = opt.tau;
    if (opt.tau_schedule == "fixed")
        cfg.tau_schedule = TauSchedule::fixed;
    else if (opt.tau_schedule == "density_scaled")
        cfg.tau_schedule = TauSchedule::density_scaled;
    else
        throw UsageError("--tau-schedule must be fixed or density_scaled");
    return cfg;
}

std::function<TraversalResult()> traversal_engine(const std::string& algo,
                                                  const WeightedGraph& g, const Options& opt) {
    Direction dir = parse_direction(opt.direction);
    if (algo == "bfs") return [&g, dir, root = opt.root] { return bfs(g, root, dir); };
    if (algo == "dfs") return [&g, dir, root = opt.root] { return dfs(g, root, dir); };
    if (algo == "hdbms")
        return [&g, cfg = hdbms_config(opt), root = opt.root] {
            return hdbms_traverse(g, root, cfg);
        };
    if (algo == "hdbms_max") {
        Options alt = opt;
        alt.policy = "max_weight";
        return [&g, cfg = hdbms_config(alt), root = opt.root] {
            return hdbms_traverse(g, root, cfg);
        };
    }
    throw UsageError("unknown traversal algorithm: " + algo);
}

GenSpec gen_spec(const Options& opt) {
    WeightDist dist = opt.weight_dist == "fixed" ? WeightDist::fixed(opt.fixed_value)
                                                 : WeightDist::uniform01();
    if (opt.weight_dist != "fixed" && opt.weight_dist != "uniform01")
        throw UsageError("--weight-dist must be uniform01 or fixed");
    if (opt.kind == "er") return GenSpec::erdos_renyi_spec(opt.n, opt.p, opt.seed, dist);
    if (opt.kind == "ba") return GenSpec::barabasi_albert_spec(opt.n, opt.m, opt.seed, dist);
    if (opt.kind == "chain") return GenSpec::chain_spec(opt.n, opt.seed, dist);
    if (opt.kind == "layered")
        return GenSpec::layered_spec(opt.levels, opt.width, opt.seed, dist);
    throw UsageError("--kind must be er, ba, chain or layered");
}

int run_traverse(const Options& opt) {
    auto g = parse_edge_list(read_file(opt.input));
    if (opt.algo == "bidir" || opt.algo == "astar") {
        PathResult r;
        if (opt.algo == "bidir") {
            r = bidirectional_search(g, opt.root, opt.goal);
        } else {
            CostModel cost{opt.cost == "weight_difference" ? CostModel::Kind::weight_difference
                                                           : CostModel::Kind::unit};
            if (opt.cost != "unit" && opt.cost != "weight_difference")
                throw UsageError("--cost must be unit or weight_difference");
            r = astar(g, opt.root, opt.goal, cost, load_heuristic(opt.heuristic_path));
        }
        write_output(opt.out_path, format_path(r) + "\n");
        return 0;
    }
    auto result = traversal_engine(opt.algo, g, opt)();
    std::string text;
    if (opt.format == "json") {
        std::string ids;
        for (std::size_t i = 0; i < result.order.size(); ++i)
            ids += (i ? "," : "") + std::to_string(result.order[i].first);
        text = "{\"order\":[" + ids + "]}\n";
    } else {
        text = format_traversal(result, opt.style == "weighted") + "\n";
    }
    write_output(opt.out_path, text);
    return 0;
}

int run_compare(const Options& opt) {
    auto g = parse_edge_list(read_file(opt.input));
    Direction dir = parse_direction(opt.direction);

    std::vector<EngineConfig> engines;
    std::stringstream list(opt.algos);
    for (std::string name; std::getline(list, name, ',');) {
        if (name.empty()) continue;
        std::string summary = opt.direction;
        if (name == "hdbms") summary = opt.policy + "," + opt.direction;
        if (name == "hdbms_max") summary = "max_weight," + opt.direction;
        engines.push_back({name, summary, traversal_engine(name, g, opt)});
    }
    auto reports = compare_report(g, opt.root, dir, engines);
    std::string text;
    if (opt.format == "csv")
        text = reports_to_csv(reports, !opt.no_timing);
    else if (opt.format == "json")
        text = reports_to_json(reports, !opt.no_timing);
    else {
        for (const auto& r : reports) {
            char buf[256];
            std::snprintf(buf, sizeof(buf),
                          "%-10s %-24s completeness=%s macd=%s dcg=%s", r.algorithm.c_str(),
                          r.config_summary.c_str(), format_weight(r.completeness).c_str(),
                          format_weight(r.order_quality_macd).c_str(),
                          format_weight(r.optimality_dcg).c_str());
            text += buf;
            if (!opt.no_timing) {
                std::snprintf(buf, sizeof(buf), " time=%.6fs", r.elapsed_seconds);
                text += buf;
            }
            text += "\n";
        }
    }
    write_output(opt.out_path, text);
    return 0;
}

int run_bench(const Options& opt) {
    auto g = parse_edge_list(read_file(opt.input));
    auto engine = traversal_engine(opt.algo, g, opt);
    auto b = bench(engine, opt.repetitions, opt.warmup);
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "%s: reps=%zu warmup=%zu mean=%.6fs stddev=%.6fs min=%.6fs\n",
                  opt.algo.c_str(), b.repetitions, b.warmup, b.mean_seconds, b.stddev_seconds,
                  b.min_seconds);
    write_output(opt.out_path, buf);
    return 0;
}

int run_gen(const Options& opt) {
    auto g = generate(gen_spec(opt));
    write_output(opt.out_path, serialize_edge_list(g));
    return 0;
}

int run_export(const Options& opt) {
    auto g = parse_edge_list(read_file(opt.input));
    if (opt.format != "dot" && opt.format != "text")
        throw UsageError("export supports --format dot");
    write_output(opt.out_path, to_dot(g));
    return 0;
}

int run_validate(const Options& opt) {
    auto g = parse_edge_list(read_file(opt.input));
    std::string text = std::to_string(g.node_count()) + " nodes, " +
                       std::to_string(g.edge_count()) + " edges\n";
    if (g.duplicate_edge_count())
        text += "warning: " + std::to_string(g.duplicate_edge_count()) +
                " duplicate edge(s) dropped\n";
    if (g.out_of_range_weight_count())
        text += "warning: " + std::to_string(g.out_of_range_weight_count()) +
                " weight(s) outside [0, 1]\n";
    write_output(opt.out_path, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphsearch: weighted-graph traversal toolkit"};
    app.require_subcommand(1);

    Options opt;
    double tau_value = -1.0;

    auto add_graph_flags = [&](CLI::App* cmd, bool need_input) {
        auto* in = cmd->add_option("--input", opt.input, "edge-list file");
        if (need_input) in->required();
        cmd->add_option("--out", opt.out_path, "output file (default stdout)");
    };
    auto add_traversal_flags = [&](CLI::App* cmd) {
        cmd->add_option("--root", opt.root, "start node");
        cmd->add_option("--direction", opt.direction, "directed|undirected");
        cmd->add_option("--policy", opt.policy, "similarity|max_weight (hdbms)");
        cmd->add_option("--tau", tau_value, "depth threshold (hdbms)");
        cmd->add_option("--tau-schedule", opt.tau_schedule, "fixed|density_scaled");
    };

    auto* traverse = app.add_subcommand("traverse", "run a traversal or path search");
    add_graph_flags(traverse, true);
    add_traversal_flags(traverse);
    traverse->add_option("--algo", opt.algo, "bfs|dfs|hdbms|hdbms_max|bidir|astar");
    traverse->add_option("--goal", opt.goal, "goal node (bidir/astar)");
    traverse->add_option("--cost", opt.cost, "unit|weight_difference (astar)");
    traverse->add_option("--heuristic", opt.heuristic_path, "heuristic file: lines of 'id value'");
    traverse->add_option("--format", opt.format, "text|json");
    traverse->add_option("--style", opt.style, "plain|weighted");

    auto* compare = app.add_subcommand("compare", "metrics table for several engines");
    add_graph_flags(compare, true);
    add_traversal_flags(compare);
    compare->add_option("--algos", opt.algos, "comma list: bfs,dfs,hdbms,hdbms_max");
    compare->add_option("--format", opt.format, "text|csv|json");
    compare->add_flag("--no-timing", opt.no_timing, "omit elapsed column (stable output)");

    auto* bench_cmd = app.add_subcommand("bench", "repeat one engine and report timings");
    add_graph_flags(bench_cmd, true);
    add_traversal_flags(bench_cmd);
    bench_cmd->add_option("--algo", opt.algo, "bfs|dfs|hdbms|hdbms_max");
    bench_cmd->add_option("--reps", opt.repetitions, "timed repetitions");
    bench_cmd->add_option("--warmup", opt.warmup, "discarded warmup runs");

    auto* gen = app.add_subcommand("gen", "generate a synthetic graph");
    add_graph_flags(gen, false);
    gen->add_option("--kind", opt.kind, "er|ba|chain|layered");
    gen->add_option("--n", opt.n, "node count (er/ba/chain)");
    gen->add_option("--p", opt.p, "edge probability (er)");
    gen->add_option("--m", opt.m, "attachments per node (ba)");
    gen->add_option("--levels", opt.levels, "levels (layered)");
    gen->add_option("--width", opt.width, "width (layered)");
    gen->add_option("--seed", opt.seed, "rng seed");
    gen->add_option("--weight-dist", opt.weight_dist, "uniform01|fixed");
    gen->add_option("--fixed-value", opt.fixed_value, "weight for --weight-dist fixed");

    auto* export_cmd = app.add_subcommand("export", "export a graph to DOT");
    add_graph_flags(export_cmd, true);
    export_cmd->add_option("--format", opt.format, "dot");

    auto* validate = app.add_subcommand("validate", "parse and report node/edge counts");
    add_graph_flags(validate, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (traverse->count("--tau") || compare->count("--tau") || bench_cmd->count("--tau")) {
        if (tau_value < 0) {
            std::cerr << "error: --tau must be >= 0\n";
            return 1;
        }
        opt.tau = tau_value;
    }
    if (export_cmd->parsed() && !export_cmd->count("--format")) opt.format = "dot";

    try {
        if (traverse->parsed()) return run_traverse(opt);
        if (compare->parsed()) return run_compare(opt);
        if (bench_cmd->parsed()) return run_bench(opt);
        if (gen->parsed()) return run_gen(opt);
        if (export_cmd->parsed()) return run_export(opt);
        if (validate->parsed()) return run_validate(opt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const NoPathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidSpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
