#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "graphsearch/graph.hpp"
#include "graphsearch/search.hpp"

namespace graphsearch {

// similarity: minimize |w(candidate) - w(current)|, ties to the smaller
// weight, then the smaller id. max_weight: maximize w(candidate), ties to
// the smaller id.
enum class SelectionPolicy { similarity, max_weight };

enum class TauSchedule { fixed, density_scaled };

// Depth-step weight-distance threshold used when no tau is configured.
// This is the value under which the published traversal orders reproduce.
inline constexpr double kDefaultTau = 0.3;

struct HdbmsConfig {
    SelectionPolicy policy = SelectionPolicy::similarity;
    Direction direction = Direction::directed;
    std::optional<double> tau;  // absent: engine default threshold
    TauSchedule tau_schedule = TauSchedule::fixed;
};

struct EmptyCandidatesError : GraphError {
    EmptyCandidatesError() : GraphError("select_next: empty candidate set") {}
};

// Discovered-but-unvisited nodes, keyed by weight for nearest-weight and
// max-weight lookup in logarithmic time.
class Frontier {
public:
    void insert(NodeId id, double weight);  // idempotent
    void erase(NodeId id, double weight);
    bool contains(NodeId id) const { return members_.count(id) != 0; }
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }

    // Member minimizing |w - query|; ties to smaller weight, then smaller id.
    NodeId nearest(double query) const;
    // Member maximizing w; ties to smaller id.
    NodeId max_weight() const;

private:
    std::map<double, std::set<NodeId>> by_weight_;
    std::set<NodeId> members_;
};

// Pure selection among candidates relative to the current node's weight.
NodeId select_next(NodeId current, const std::set<NodeId>& candidates,
                   const WeightedGraph& g, SelectionPolicy policy);

// fixed: tau unchanged. density_scaled: tau scaled by the graph's edge
// density |E| / (|V|*(|V|-1)), clamped to [0.01, tau]. Absent tau stays
// absent.
std::optional<double> effective_tau(const HdbmsConfig& config, const WeightedGraph& g);

// Hybrid depth-breadth traversal. Each step first considers the unvisited
// neighbors of the current node whose weight distance is within the
// threshold (depth step); when none qualify it falls back to the whole
// frontier (frontier jump). The very first move after the root always
// takes the highest-weight neighbor, matching the reference orders.
TraversalResult hdbms_traverse(const WeightedGraph& g, NodeId root, const HdbmsConfig& config);

}  // namespace graphsearch
