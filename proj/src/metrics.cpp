#include "graphsearch/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace graphsearch {

double completeness(const TraversalResult& result, const WeightedGraph& g, NodeId root,
                    Direction dir) {
    std::set<NodeId> visited;
    for (const auto& [id, w] : result.order) visited.insert(id);
    auto reachable = reachable_set(g, root, dir);
    return static_cast<double>(visited.size()) / static_cast<double>(reachable.size());
}

double order_quality_macd(const TraversalResult& result) {
    if (result.order.empty()) throw GraphError("order_quality_macd: empty traversal");
    if (result.order.size() == 1) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < result.order.size(); ++i)
        sum += std::fabs(result.order[i + 1].second - result.order[i].second);
    return sum / static_cast<double>(result.order.size() - 1);
}

double optimality_dcg(const TraversalResult& result) {
    if (result.order.empty()) throw GraphError("optimality_dcg: empty traversal");
    double sum = 0.0;
    for (std::size_t i = 0; i < result.order.size(); ++i)
        sum += result.order[i].second / std::log2(static_cast<double>(i) + 2.0);
    return sum;
}

BenchResult bench(const std::function<TraversalResult()>& engine, std::size_t repetitions,
                  std::size_t warmup) {
    if (repetitions < 1) throw std::invalid_argument("bench: repetitions must be >= 1");
    for (std::size_t i = 0; i < warmup; ++i) engine();

    std::vector<double> times;
    times.reserve(repetitions);
    std::vector<NodeId> reference;
    for (std::size_t i = 0; i < repetitions; ++i) {
        TraversalResult r = engine();
        if (i == 0)
            reference = r.ids();
        else if (r.ids() != reference)
            throw GraphError("bench: traversal order changed between repetitions");
        times.push_back(r.elapsed_seconds);
    }

    BenchResult out;
    out.repetitions = repetitions;
    out.warmup = warmup;
    double sum = 0.0;
    for (double t : times) sum += t;
    out.mean_seconds = sum / static_cast<double>(times.size());
    double var = 0.0;
    for (double t : times) var += (t - out.mean_seconds) * (t - out.mean_seconds);
    out.stddev_seconds = std::sqrt(var / static_cast<double>(times.size()));
    out.min_seconds = *std::min_element(times.begin(), times.end());
    return out;
}

std::vector<MetricsReport> compare_report(const WeightedGraph& g, NodeId root, Direction dir,
                                          const std::vector<EngineConfig>& engines) {
    if (engines.empty()) throw std::invalid_argument("compare_report: no engines given");
    std::vector<MetricsReport> out;
    out.reserve(engines.size());
    for (const auto& engine : engines) {
        TraversalResult r = engine.run();
        MetricsReport report;
        report.algorithm = engine.label;
        report.config_summary = engine.summary;
        report.completeness = completeness(r, g, root, dir);
        report.order_quality_macd = order_quality_macd(r);
        report.optimality_dcg = optimality_dcg(r);
        report.elapsed_seconds = r.elapsed_seconds;
        out.push_back(std::move(report));
    }
    return out;
}

namespace {

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string metric_str(double v) { return format_weight(v); }

}  // namespace

std::string reports_to_csv(const std::vector<MetricsReport>& reports, bool with_timing) {
    std::string out = "algorithm,config_summary,completeness,order_quality_macd,optimality_dcg";
    if (with_timing) out += ",elapsed_seconds";
    out += "\n";
    for (const auto& r : reports) {
        out += r.algorithm + "," + r.config_summary + "," + metric_str(r.completeness) + "," +
               metric_str(r.order_quality_macd) + "," + metric_str(r.optimality_dcg);
        if (with_timing) out += "," + fixed6(r.elapsed_seconds);
        out += "\n";
    }
    return out;
}

std::string reports_to_json(const std::vector<MetricsReport>& reports, bool with_timing) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json row{{"algorithm", r.algorithm},
                           {"config_summary", r.config_summary},
                           {"completeness", r.completeness},
                           {"order_quality_macd", r.order_quality_macd},
                           {"optimality_dcg", r.optimality_dcg}};
        if (with_timing) row["elapsed_seconds"] = fixed6(r.elapsed_seconds);
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

}  // namespace graphsearch
