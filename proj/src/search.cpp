#include "graphsearch/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace graphsearch {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

double CostModel::edge_cost(const WeightedGraph& g, NodeId u, NodeId v) const {
    if (kind == Kind::unit) return 1.0;
    return std::fabs(g.weight(u) - g.weight(v));
}

TraversalResult bfs(const WeightedGraph& g, NodeId root, Direction dir) {
    if (!g.has_node(root)) throw UnknownNodeError(root);
    auto t0 = Clock::now();
    TraversalResult result;
    std::unordered_set<NodeId> marked{root};
    std::deque<NodeId> queue{root};
    bool first = true;
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        result.order.emplace_back(v, g.weight(v));
        result.step_kinds.push_back(first ? StepKind::root : StepKind::depth_step);
        first = false;
        for (NodeId u : g.neighbors(v, dir)) {
            if (marked.insert(u).second) queue.push_back(u);
        }
    }
    result.elapsed_seconds = seconds_since(t0);
    return result;
}

TraversalResult dfs(const WeightedGraph& g, NodeId root, Direction dir) {
    if (!g.has_node(root)) throw UnknownNodeError(root);
    auto t0 = Clock::now();
    TraversalResult result;
    std::unordered_set<NodeId> visited;

    // Explicit stack of (node, next neighbor index), equivalent to the
    // recursive preorder.
    std::vector<std::pair<NodeId, std::size_t>> stack;
    auto visit = [&](NodeId v, StepKind kind) {
        visited.insert(v);
        result.order.emplace_back(v, g.weight(v));
        result.step_kinds.push_back(kind);
        stack.emplace_back(v, 0);
    };
    visit(root, StepKind::root);
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        const auto nbrs = g.neighbors(v, dir);
        if (idx >= nbrs.size()) {
            stack.pop_back();
            continue;
        }
        NodeId next = nbrs[idx++];
        if (!visited.count(next)) visit(next, StepKind::depth_step);
    }
    result.elapsed_seconds = seconds_since(t0);
    return result;
}

std::set<NodeId> reachable_set(const WeightedGraph& g, NodeId root, Direction dir) {
    if (!g.has_node(root)) throw UnknownNodeError(root);
    std::set<NodeId> seen{root};
    std::vector<NodeId> todo{root};
    while (!todo.empty()) {
        NodeId v = todo.back();
        todo.pop_back();
        for (NodeId u : g.neighbors(v, dir))
            if (seen.insert(u).second) todo.push_back(u);
    }
    return seen;
}

PathResult bidirectional_search(const WeightedGraph& g, NodeId start, NodeId goal) {
    if (!g.has_node(start)) throw UnknownNodeError(start);
    if (!g.has_node(goal)) throw UnknownNodeError(goal);
    if (start == goal) return {{start}, 0.0, 0};

    std::unordered_map<NodeId, NodeId> parent_s, parent_g;
    std::unordered_map<NodeId, int> dist_s{{start, 0}}, dist_g{{goal, 0}};
    std::deque<NodeId> wave_s{start}, wave_g{goal};
    int depth_s = 0, depth_g = 0;
    std::size_t expanded = 0;

    const int kInf = std::numeric_limits<int>::max();
    int best = kInf;
    NodeId meeting = 0;

    auto scan_meeting = [&] {
        // Among double-settled nodes, smallest total distance wins; ties by
        // smaller id. dist maps are small, a rescan keeps this simple.
        for (const auto& [v, ds] : dist_s) {
            auto it = dist_g.find(v);
            if (it == dist_g.end()) continue;
            int total = ds + it->second;
            if (total < best || (total == best && v < meeting)) {
                best = total;
                meeting = v;
            }
        }
    };

    auto expand_wave = [&](std::deque<NodeId>& wave, std::unordered_map<NodeId, int>& dist,
                           std::unordered_map<NodeId, NodeId>& parent, bool forward) {
        std::deque<NodeId> next;
        for (NodeId v : wave) {
            ++expanded;
            const auto& nbrs = forward ? g.out_neighbors(v) : g.in_neighbors(v);
            for (NodeId u : nbrs) {
                if (dist.count(u)) continue;
                dist[u] = dist[v] + 1;
                parent[u] = v;
                next.push_back(u);
            }
        }
        wave = std::move(next);
    };

    bool start_side = true;
    while ((!wave_s.empty() || !wave_g.empty()) && best > depth_s + depth_g) {
        if (start_side && !wave_s.empty()) {
            expand_wave(wave_s, dist_s, parent_s, /*forward=*/true);
            ++depth_s;
        } else if (!wave_g.empty()) {
            expand_wave(wave_g, dist_g, parent_g, /*forward=*/false);
            ++depth_g;
        }
        start_side = !start_side;
        scan_meeting();
    }

    if (best == kInf) throw NoPathError(start, goal);

    std::vector<NodeId> path;
    for (NodeId v = meeting;; v = parent_s.at(v)) {
        path.push_back(v);
        if (v == start) break;
    }
    std::reverse(path.begin(), path.end());
    for (NodeId v = meeting; v != goal;) {
        v = parent_g.at(v);
        path.push_back(v);
    }
    return {std::move(path), static_cast<double>(best), expanded};
}

PathResult astar(const WeightedGraph& g, NodeId start, NodeId goal,
                 const CostModel& cost, const Heuristic& h) {
    if (!g.has_node(start)) throw UnknownNodeError(start);
    if (!g.has_node(goal)) throw UnknownNodeError(goal);

    struct Entry {
        double f;
        double g_cost;
        NodeId node;
        bool operator>(const Entry& o) const {
            if (f != o.f) return f > o.f;
            if (g_cost != o.g_cost) return g_cost > o.g_cost;
            return node > o.node;
        }
    };

    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> open;
    std::unordered_map<NodeId, double> best_g{{start, 0.0}};
    std::unordered_map<NodeId, NodeId> parent;
    std::unordered_set<NodeId> closed;
    std::size_t expanded = 0;

    open.push({h(start), 0.0, start});
    while (!open.empty()) {
        auto [f, gc, v] = open.top();
        open.pop();
        if (closed.count(v)) continue;
        closed.insert(v);
        ++expanded;
        if (v == goal) {
            std::vector<NodeId> path;
            for (NodeId x = goal;; x = parent.at(x)) {
                path.push_back(x);
                if (x == start) break;
            }
            std::reverse(path.begin(), path.end());
            return {std::move(path), gc, expanded};
        }
        for (NodeId u : g.out_neighbors(v)) {
            double cand = gc + cost.edge_cost(g, v, u);
            auto it = best_g.find(u);
            if (it != best_g.end() && it->second <= cand) continue;
            best_g[u] = cand;
            parent[u] = v;
            open.push({cand + h(u), cand, u});
        }
    }
    throw NoPathError(start, goal);
}

}  // namespace graphsearch
