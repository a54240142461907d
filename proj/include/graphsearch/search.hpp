#pragma once

#include <map>
#include <set>
#include <vector>

#include "graphsearch/graph.hpp"

namespace graphsearch {

enum class StepKind { root, depth_step, frontier_jump };

struct TraversalResult {
    // Visit sequence with each node's weight.
    std::vector<std::pair<NodeId, double>> order;
    // Aligned with order; order[0] is always kind root.
    std::vector<StepKind> step_kinds;
    double elapsed_seconds = 0.0;

    std::vector<NodeId> ids() const {
        std::vector<NodeId> out;
        out.reserve(order.size());
        for (const auto& [id, w] : order) out.push_back(id);
        return out;
    }
};

struct PathResult {
    std::vector<NodeId> path;
    double cost = 0.0;
    std::size_t expanded_count = 0;
};

struct NoPathError : GraphError {
    NoPathError(NodeId start, NodeId goal)
        : GraphError("no path from " + std::to_string(start) + " to " + std::to_string(goal)) {}
};

// unit: every edge costs 1. weight_difference: edge (u,v) costs |w(u)-w(v)|.
struct CostModel {
    enum class Kind { unit, weight_difference };
    Kind kind = Kind::unit;

    double edge_cost(const WeightedGraph& g, NodeId u, NodeId v) const;
};

// Per-node estimates of remaining cost; missing entries count as zero.
struct Heuristic {
    std::map<NodeId, double> estimates;
    double operator()(NodeId v) const {
        auto it = estimates.find(v);
        return it == estimates.end() ? 0.0 : it->second;
    }
};

// FIFO traversal, nodes marked at enqueue time, neighbors enqueued in
// adjacency order.
TraversalResult bfs(const WeightedGraph& g, NodeId root, Direction dir);

// Preorder depth-first, neighbors tried in adjacency order.
TraversalResult dfs(const WeightedGraph& g, NodeId root, Direction dir);

std::set<NodeId> reachable_set(const WeightedGraph& g, NodeId root, Direction dir);

// Alternating BFS waves from both ends; returns a minimum-hop path under
// the unit cost model. Throws NoPathError when goal is unreachable.
PathResult bidirectional_search(const WeightedGraph& g, NodeId start, NodeId goal);

// Expands the minimum-f node, ties by smaller g then smaller id.
PathResult astar(const WeightedGraph& g, NodeId start, NodeId goal,
                 const CostModel& cost, const Heuristic& h);

}  // namespace graphsearch
