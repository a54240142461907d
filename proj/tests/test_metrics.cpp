#include "doctest.h"

#include <cmath>
#include <set>

#include "graphsearch/gen.hpp"
#include "graphsearch/hdbms.hpp"
#include "graphsearch/metrics.hpp"
#include "oracles.hpp"
#include "social_graph_data.hpp"

using namespace graphsearch;

namespace {

WeightedGraph social_graph() { return parse_edge_list(kSocialEdgeList); }

WeightedGraph comparison_graph() {
    std::set<NodeId> keep;
    for (NodeId i = 1; i <= 12; ++i) keep.insert(i);
    return induced_subgraph(social_graph(), keep);
}

TraversalResult single_node(double w) {
    TraversalResult r;
    r.order.emplace_back(1, w);
    r.step_kinds.push_back(StepKind::root);
    return r;
}

}  // namespace

TEST_CASE("completeness") {
    auto g2 = comparison_graph();
    for (auto dir : {Direction::directed}) {
        CHECK(completeness(bfs(g2, 1, dir), g2, 1, dir) == doctest::Approx(1.0));
        CHECK(completeness(dfs(g2, 1, dir), g2, 1, dir) == doctest::Approx(1.0));
        CHECK(completeness(hdbms_traverse(g2, 1, HdbmsConfig{}), g2, 1, dir) ==
              doctest::Approx(1.0));
    }
    auto single = parse_edge_list("7|0.4");
    CHECK(completeness(bfs(single, 7, Direction::directed), single, 7, Direction::directed) ==
          doctest::Approx(1.0));
    // Node 21 has no out-edges: reachable set is just itself.
    auto g = social_graph();
    CHECK(completeness(bfs(g, 21, Direction::directed), g, 21, Direction::directed) ==
          doctest::Approx(1.0));
}

TEST_CASE("order quality macd") {
    auto g2 = comparison_graph();
    auto r = bfs(g2, 1, Direction::directed);
    // 11 consecutive diffs of the published order sum to 2.2.
    CHECK(order_quality_macd(r) == doctest::Approx(0.2).epsilon(1e-12));

    CHECK(order_quality_macd(single_node(0.7)) == 0.0);

    auto flat = generate(GenSpec::chain_spec(6, 1, WeightDist::fixed(0.4)));
    CHECK(order_quality_macd(bfs(flat, 1, Direction::directed)) == 0.0);
}

TEST_CASE("macd invariant under weight reflection w -> c - w") {
    auto g = social_graph();
    auto r = bfs(g, 1, Direction::directed);
    auto reflected = r;
    for (auto& [id, w] : reflected.order) w = 1.7 - w;
    CHECK(order_quality_macd(reflected) == doctest::Approx(order_quality_macd(r)).epsilon(1e-12));
}

TEST_CASE("optimality dcg") {
    CHECK(optimality_dcg(single_node(0.3)) == doctest::Approx(0.3));

    TraversalResult zeros;
    zeros.order = {{1, 0.0}, {2, 0.0}};
    zeros.step_kinds = {StepKind::root, StepKind::depth_step};
    CHECK(optimality_dcg(zeros) == 0.0);

    auto g = social_graph();
    HdbmsConfig cfg;
    cfg.policy = SelectionPolicy::max_weight;
    cfg.direction = Direction::undirected;
    CHECK(optimality_dcg(hdbms_traverse(g, 1, cfg)) >=
          optimality_dcg(bfs(g, 1, Direction::directed)));
}

TEST_CASE("dcg upper bound from descending-weight sort") {
    auto g = social_graph();
    for (auto engine : {bfs(g, 1, Direction::directed), dfs(g, 1, Direction::directed)}) {
        auto sorted = engine;
        std::sort(sorted.order.begin(), sorted.order.end(),
                  [](const auto& a, const auto& b) { return a.second > b.second; });
        CHECK(optimality_dcg(sorted) >= optimality_dcg(engine) - 1e-12);
    }
}

TEST_CASE("bench basics") {
    auto g2 = comparison_graph();
    auto engine = [&] { return bfs(g2, 1, Direction::directed); };

    auto b = bench(engine, 100, 5);
    CHECK(b.mean_seconds < 0.001);
    CHECK(b.min_seconds <= b.mean_seconds);
    CHECK(b.stddev_seconds >= 0.0);

    auto one = bench(engine, 1, 0);
    CHECK(one.min_seconds == one.mean_seconds);
    CHECK(one.stddev_seconds == 0.0);

    CHECK_THROWS(bench(engine, 0, 0));
}

TEST_CASE("compare report reproduces published rows") {
    auto g2 = comparison_graph();
    std::vector<EngineConfig> engines{
        {"bfs", "directed", [&] { return bfs(g2, 1, Direction::directed); }},
        {"dfs", "directed", [&] { return dfs(g2, 1, Direction::directed); }},
        {"hdbms", "similarity,directed", [&] { return hdbms_traverse(g2, 1, HdbmsConfig{}); }},
    };
    auto reports = compare_report(g2, 1, Direction::directed, engines);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) CHECK(r.completeness == doctest::Approx(1.0));
    CHECK(reports[0].algorithm == "bfs");
    CHECK(reports[0].order_quality_macd == doctest::Approx(0.2).epsilon(1e-12));

    auto csv = reports_to_csv(reports, false);
    CHECK(csv.find("algorithm,config_summary,completeness") == 0);
    CHECK(csv.find("\nbfs,directed,1,") != std::string::npos);
    auto json = reports_to_json(reports, false);
    CHECK(json.find("\"algorithm\": \"bfs\"") != std::string::npos);

    CHECK_THROWS(compare_report(g2, 1, Direction::directed, {}));
}

TEST_CASE("bench rejects nondeterministic engines") {
    auto g2 = comparison_graph();
    int calls = 0;
    auto flaky = [&] {
        ++calls;
        return bfs(g2, calls % 2 ? 1 : 2, Direction::directed);
    };
    CHECK_THROWS_AS(bench(flaky, 3, 0), GraphError);
}
