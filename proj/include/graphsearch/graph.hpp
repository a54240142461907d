#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace graphsearch {

// Node labels as they appear in input files. Positive, not necessarily
// contiguous.
using NodeId = int;

enum class Direction { directed, undirected };

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownNodeError : GraphError {
    NodeId node;
    explicit UnknownNodeError(NodeId n)
        : GraphError("unknown node " + std::to_string(n)), node(n) {}
};

// Raised by parse_edge_list. kind distinguishes the error classes the
// file format defines.
struct ParseError : GraphError {
    enum class Kind { malformed_token, self_loop, weight_conflict };
    Kind kind;
    int line;
    std::string token;
    ParseError(Kind k, int ln, std::string tok, const std::string& msg)
        : GraphError("line " + std::to_string(ln) + ": " + msg + " ('" + tok + "')"),
          kind(k), line(ln), token(std::move(tok)) {}
};

// Immutable node-weighted directed graph with forward and reverse
// adjacency. Neighbor lists keep the insertion order of first appearance,
// which is what makes the published traversal orders reproducible.
class WeightedGraph {
public:
    class Builder;

    bool has_node(NodeId v) const { return weights_.count(v) != 0; }
    double weight(NodeId v) const;
    std::size_t node_count() const { return weights_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t duplicate_edge_count() const { return duplicates_; }
    std::size_t out_of_range_weight_count() const { return range_warnings_; }

    // Ascending by id.
    std::vector<NodeId> node_ids() const;
    // Construction order.
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

    const std::vector<NodeId>& out_neighbors(NodeId v) const;
    const std::vector<NodeId>& in_neighbors(NodeId v) const;

    // Directed: forward adjacency. Undirected: forward neighbors first,
    // then reverse-only ones, each in insertion order, no duplicates.
    std::vector<NodeId> neighbors(NodeId v, Direction dir) const;

    bool operator==(const WeightedGraph& other) const;

private:
    std::map<NodeId, double> weights_;
    std::unordered_map<NodeId, std::vector<NodeId>> forward_;
    std::unordered_map<NodeId, std::vector<NodeId>> reverse_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::size_t duplicates_ = 0;
    std::size_t range_warnings_ = 0;

    static const std::vector<NodeId> kEmpty;
};

// Weight equality tolerance for conflict detection. Input weights use a
// couple of decimal places; this absorbs representation noise only.
inline constexpr double kWeightTolerance = 1e-9;

class WeightedGraph::Builder {
public:
    // Throws GraphError on a weight conflict beyond kWeightTolerance.
    Builder& add_node(NodeId id, double weight);
    // Self-loops throw; exact duplicate edges are dropped and counted.
    Builder& add_edge(NodeId from, double from_weight, NodeId to, double to_weight);
    Builder& add_edge(NodeId from, NodeId to);

    WeightedGraph build();

private:
    WeightedGraph g_;
    std::set<std::pair<NodeId, NodeId>> seen_edges_;
};

// Edge-list text format: whitespace-separated `u|w v|w` pairs, several
// per line allowed; a line holding a single `u|w` token declares an
// isolated node; `#` starts a comment line.
WeightedGraph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const WeightedGraph& g);

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::set<NodeId>& keep);

// DOT digraph; nodes ascending by id labelled "id (weight)", edges in
// construction order.
std::string to_dot(const WeightedGraph& g);

// Shortest decimal string that parses back to exactly this value.
std::string format_weight(double w);

}  // namespace graphsearch
