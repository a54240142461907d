#include "doctest.h"

#include <set>

#include "graphsearch/gen.hpp"
#include "graphsearch/search.hpp"
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

std::vector<WeightedGraph> corpus(std::size_t count, std::size_t max_n) {
    std::vector<WeightedGraph> graphs;
    for (std::uint64_t seed = 0; graphs.size() < count; ++seed) {
        std::size_t n = 2 + seed % (max_n - 1);
        switch (seed % 4) {
            case 0: graphs.push_back(generate(GenSpec::erdos_renyi_spec(n, 0.15, seed))); break;
            case 1:
                graphs.push_back(generate(GenSpec::barabasi_albert_spec(n < 3 ? 3 : n, 2, seed)));
                break;
            case 2: graphs.push_back(generate(GenSpec::chain_spec(n, seed))); break;
            default:
                graphs.push_back(generate(GenSpec::layered_spec(1 + n / 4, 3, seed)));
                break;
        }
    }
    return graphs;
}

}  // namespace

TEST_CASE("bfs golden order on comparison graph") {
    auto r = bfs(comparison_graph(), 1, Direction::directed);
    CHECK(r.ids() == std::vector<NodeId>{1, 2, 4, 5, 11, 3, 7, 6, 8, 9, 12, 10});
    CHECK(r.step_kinds[0] == StepKind::root);
}

TEST_CASE("bfs on full social graph") {
    auto r = bfs(social_graph(), 1, Direction::directed);
    std::vector<NodeId> expected{1, 2, 4, 5, 11, 3, 7, 6, 8, 9, 12, 10,
                                 13, 14, 15, 16, 17, 18, 19, 20, 21};
    CHECK(oracles::bfs_order(social_graph(), 1, Direction::directed) == expected);
    CHECK(r.ids() == expected);
}

TEST_CASE("bfs single node") {
    auto g = parse_edge_list("7|0.4");
    CHECK(bfs(g, 7, Direction::directed).ids() == std::vector<NodeId>{7});
}

TEST_CASE("dfs golden order on comparison graph") {
    auto r = dfs(comparison_graph(), 1, Direction::directed);
    CHECK(r.ids() == std::vector<NodeId>{1, 2, 3, 6, 10, 12, 9, 5, 8, 11, 4, 7});
}

TEST_CASE("dfs on full social graph") {
    std::vector<NodeId> expected{1, 2, 3, 6, 10, 12, 13, 14, 15, 16, 17,
                                 18, 19, 20, 21, 9, 5, 8, 11, 4, 7};
    CHECK(oracles::dfs_order(social_graph(), 1, Direction::directed) == expected);
    CHECK(dfs(social_graph(), 1, Direction::directed).ids() == expected);
}

TEST_CASE("traversals match oracles on corpus") {
    for (const auto& g : corpus(40, 30)) {
        for (Direction dir : {Direction::directed, Direction::undirected}) {
            CHECK(bfs(g, 1, dir).ids() == oracles::bfs_order(g, 1, dir));
            CHECK(dfs(g, 1, dir).ids() == oracles::dfs_order(g, 1, dir));
            auto reach = reachable_set(g, 1, dir);
            CHECK(reach == oracles::reachable(g, 1, dir));
            auto border = bfs(g, 1, dir).ids();
            CHECK(std::set<NodeId>(border.begin(), border.end()) == reach);
            auto dorder = dfs(g, 1, dir).ids();
            CHECK(std::set<NodeId>(dorder.begin(), dorder.end()) == reach);
        }
    }
}

TEST_CASE("bfs layer monotonicity") {
    for (const auto& g : corpus(20, 25)) {
        auto dist = oracles::hop_distances(g, 1);
        auto order = bfs(g, 1, Direction::directed).ids();
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            CHECK(dist.at(order[i]) <= dist.at(order[i + 1]));
    }
}

TEST_CASE("reachable set examples") {
    auto g2 = comparison_graph();
    CHECK(reachable_set(g2, 1, Direction::directed).size() == 12);

    auto g = social_graph();
    CHECK(reachable_set(g, 1, Direction::directed).size() == 21);
    CHECK(reachable_set(g, 21, Direction::directed) == std::set<NodeId>{21});
}

TEST_CASE("bidirectional search basics") {
    auto g2 = comparison_graph();
    auto r = bidirectional_search(g2, 1, 12);
    CHECK(r.cost == doctest::Approx(3));
    CHECK(r.path.size() == 4);
    CHECK(r.path.front() == 1);
    CHECK(r.path.back() == 12);
    // Consecutive path entries must be forward edges.
    for (std::size_t i = 0; i + 1 < r.path.size(); ++i) {
        const auto& out = g2.out_neighbors(r.path[i]);
        CHECK(std::find(out.begin(), out.end(), r.path[i + 1]) != out.end());
    }

    auto same = bidirectional_search(g2, 3, 3);
    CHECK(same.path == std::vector<NodeId>{3});
    CHECK(same.cost == 0);

    CHECK_THROWS_AS(bidirectional_search(social_graph(), 21, 1), NoPathError);
}

TEST_CASE("astar basics") {
    auto g2 = comparison_graph();
    auto unit = astar(g2, 1, 12, CostModel{CostModel::Kind::unit}, Heuristic{});
    CHECK(unit.cost == doctest::Approx(3));

    auto same = astar(g2, 4, 4, CostModel{CostModel::Kind::unit}, Heuristic{});
    CHECK(same.cost == 0);
    CHECK(same.path == std::vector<NodeId>{4});

    CostModel wd{CostModel::Kind::weight_difference};
    auto r = astar(g2, 1, 10, wd, Heuristic{});
    auto expected = oracles::min_cost_exhaustive(
        g2, 1, 10, [&](NodeId u, NodeId v) { return wd.edge_cost(g2, u, v); });
    REQUIRE(expected.has_value());
    CHECK(r.cost == doctest::Approx(*expected).epsilon(1e-12));
}

TEST_CASE("unit-cost oracle equivalence on corpus") {
    for (const auto& g : corpus(200, 50)) {
        auto dist = oracles::hop_distances(g, 1);
        for (const auto& [goal, d] : dist) {
            auto a = astar(g, 1, goal, CostModel{CostModel::Kind::unit}, Heuristic{});
            CHECK(a.cost == doctest::Approx(d));
            auto b = bidirectional_search(g, 1, goal);
            CHECK(b.cost == doctest::Approx(d));
        }
    }
}

TEST_CASE("admissible heuristic keeps optimality and prunes expansions") {
    for (const auto& g : corpus(30, 15)) {
        auto dist_to = [&](NodeId goal) {
            // Exact remaining hop counts: reverse BFS from the goal.
            std::map<NodeId, int> d{{goal, 0}};
            std::vector<NodeId> layer{goal};
            while (!layer.empty()) {
                std::vector<NodeId> next;
                for (NodeId v : layer)
                    for (NodeId u : g.in_neighbors(v))
                        if (!d.count(u)) {
                            d[u] = d[v] + 1;
                            next.push_back(u);
                        }
                layer = std::move(next);
            }
            return d;
        };
        auto reach = oracles::hop_distances(g, 1);
        for (const auto& [goal, d] : reach) {
            Heuristic exact;
            for (const auto& [v, rem] : dist_to(goal)) exact.estimates[v] = rem;
            auto with_h = astar(g, 1, goal, CostModel{CostModel::Kind::unit}, exact);
            auto blind = astar(g, 1, goal, CostModel{CostModel::Kind::unit}, Heuristic{});
            CHECK(with_h.cost == doctest::Approx(blind.cost));
            CHECK(with_h.expanded_count <= blind.expanded_count);
        }
    }
}

TEST_CASE("search determinism") {
    auto g = social_graph();
    CHECK(bfs(g, 1, Direction::directed).ids() == bfs(g, 1, Direction::directed).ids());
    CHECK(dfs(g, 1, Direction::undirected).ids() == dfs(g, 1, Direction::undirected).ids());
    auto p1 = bidirectional_search(g, 1, 12);
    auto p2 = bidirectional_search(g, 1, 12);
    CHECK(p1.path == p2.path);
}

TEST_CASE("unknown node errors") {
    auto g = parse_edge_list("1|0.3 2|0.4");
    CHECK_THROWS_AS(bfs(g, 5, Direction::directed), UnknownNodeError);
    CHECK_THROWS_AS(dfs(g, 5, Direction::directed), UnknownNodeError);
    CHECK_THROWS_AS(bidirectional_search(g, 1, 5), UnknownNodeError);
    CHECK_THROWS_AS(astar(g, 5, 1, CostModel{}, Heuristic{}), UnknownNodeError);
}
