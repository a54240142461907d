#include "graphsearch/hdbms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_set>

namespace graphsearch {

namespace {

// Weight comparisons tolerate float noise so that decimal inputs like
// |0.5-0.4| and |0.4-0.3| compare as the tie they are in exact arithmetic.
constexpr double kEps = 1e-12;

using Clock = std::chrono::steady_clock;

}  // namespace

void Frontier::insert(NodeId id, double weight) {
    if (!members_.insert(id).second) return;
    by_weight_[weight].insert(id);
}

void Frontier::erase(NodeId id, double weight) {
    if (!members_.erase(id)) return;
    auto it = by_weight_.find(weight);
    it->second.erase(id);
    if (it->second.empty()) by_weight_.erase(it);
}

NodeId Frontier::nearest(double query) const {
    auto above = by_weight_.lower_bound(query);
    auto pick_smallest_id = [](const auto& it) { return *it->second.begin(); };
    if (above == by_weight_.begin()) return pick_smallest_id(above);
    auto below = std::prev(above);
    if (above == by_weight_.end()) return pick_smallest_id(below);
    double d_below = query - below->first;
    double d_above = above->first - query;
    // Tie goes to the smaller weight, i.e. the entry below the query.
    if (d_below <= d_above + kEps) return pick_smallest_id(below);
    return pick_smallest_id(above);
}

NodeId Frontier::max_weight() const {
    auto last = std::prev(by_weight_.end());
    return *last->second.begin();
}

NodeId select_next(NodeId current, const std::set<NodeId>& candidates,
                   const WeightedGraph& g, SelectionPolicy policy) {
    if (candidates.empty()) throw EmptyCandidatesError();
    const double ref = g.weight(current);
    bool have = false;
    NodeId best = 0;
    double best_w = 0;
    for (NodeId c : candidates) {
        double w = g.weight(c);
        if (!have) {
            have = true;
            best = c;
            best_w = w;
            continue;
        }
        bool better;
        if (policy == SelectionPolicy::similarity) {
            double d = std::fabs(w - ref), bd = std::fabs(best_w - ref);
            if (d < bd - kEps) better = true;
            else if (d > bd + kEps) better = false;
            else if (w < best_w - kEps) better = true;
            else if (w > best_w + kEps) better = false;
            else better = c < best;
        } else {
            if (w > best_w + kEps) better = true;
            else if (w < best_w - kEps) better = false;
            else better = c < best;
        }
        if (better) {
            best = c;
            best_w = w;
        }
    }
    return best;
}

std::optional<double> effective_tau(const HdbmsConfig& config, const WeightedGraph& g) {
    if (!config.tau) return std::nullopt;
    double tau = *config.tau;
    if (config.tau_schedule == TauSchedule::fixed) return tau;
    const double n = static_cast<double>(g.node_count());
    double density = n > 1 ? static_cast<double>(g.edge_count()) / (n * (n - 1)) : 0.0;
    double scaled = tau * density;
    if (tau < 0.01) return tau;
    return std::clamp(scaled, 0.01, tau);
}

TraversalResult hdbms_traverse(const WeightedGraph& g, NodeId root, const HdbmsConfig& config) {
    if (!g.has_node(root)) throw UnknownNodeError(root);
    auto t0 = Clock::now();

    const double threshold = effective_tau(config, g).value_or(kDefaultTau);

    TraversalResult result;
    std::unordered_set<NodeId> visited{root};
    Frontier frontier;
    result.order.emplace_back(root, g.weight(root));
    result.step_kinds.push_back(StepKind::root);

    NodeId current = root;
    bool first_move = true;
    for (;;) {
        std::set<NodeId> neighbor_candidates;
        for (NodeId u : g.neighbors(current, config.direction)) {
            if (visited.count(u)) continue;
            frontier.insert(u, g.weight(u));
            neighbor_candidates.insert(u);
        }
        if (frontier.empty()) break;

        NodeId chosen;
        StepKind kind;
        if (first_move) {
            // The opening move always goes to the highest-weight neighbor,
            // regardless of the configured policy.
            chosen = select_next(current, neighbor_candidates, g, SelectionPolicy::max_weight);
            kind = StepKind::depth_step;
        } else {
            const double ref = g.weight(current);
            std::set<NodeId> within;
            for (NodeId c : neighbor_candidates)
                if (std::fabs(g.weight(c) - ref) <= threshold + kEps) within.insert(c);
            if (!within.empty()) {
                chosen = select_next(current, within, g, config.policy);
                kind = StepKind::depth_step;
            } else {
                chosen = config.policy == SelectionPolicy::similarity ? frontier.nearest(ref)
                                                                      : frontier.max_weight();
                kind = StepKind::frontier_jump;
            }
        }
        frontier.erase(chosen, g.weight(chosen));
        visited.insert(chosen);
        result.order.emplace_back(chosen, g.weight(chosen));
        result.step_kinds.push_back(kind);
        current = chosen;
        first_move = false;
    }

    result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return result;
}

}  // namespace graphsearch
