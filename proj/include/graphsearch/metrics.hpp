#pragma once

#include <functional>
#include <string>
#include <vector>

#include "graphsearch/graph.hpp"
#include "graphsearch/search.hpp"

namespace graphsearch {

struct MetricsReport {
    std::string algorithm;
    std::string config_summary;
    double completeness = 0.0;
    double order_quality_macd = 0.0;  // mean |w(i+1)-w(i)|, lower is smoother
    double optimality_dcg = 0.0;      // sum w(v_i)/log2(i+1), higher is better
    double elapsed_seconds = 0.0;
};

struct BenchResult {
    std::size_t repetitions = 0;
    std::size_t warmup = 0;
    double mean_seconds = 0.0;
    double stddev_seconds = 0.0;
    double min_seconds = 0.0;
};

double completeness(const TraversalResult& result, const WeightedGraph& g, NodeId root,
                    Direction dir);
double order_quality_macd(const TraversalResult& result);
double optimality_dcg(const TraversalResult& result);

// Runs the engine warmup times untimed, then repetitions timed ones.
// Traversal orders must be identical across repetitions.
BenchResult bench(const std::function<TraversalResult()>& engine, std::size_t repetitions,
                  std::size_t warmup);

struct EngineConfig {
    std::string label;
    std::string summary;
    std::function<TraversalResult()> run;
};

std::vector<MetricsReport> compare_report(const WeightedGraph& g, NodeId root, Direction dir,
                                          const std::vector<EngineConfig>& engines);

// algorithm,config_summary,completeness,order_quality_macd,optimality_dcg,
// elapsed_seconds. Elapsed uses 6 decimal places; with_timing=false drops
// the column for byte-stable output.
std::string reports_to_csv(const std::vector<MetricsReport>& reports, bool with_timing = true);
std::string reports_to_json(const std::vector<MetricsReport>& reports, bool with_timing = true);

}  // namespace graphsearch
