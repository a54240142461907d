#include "graphsearch/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace graphsearch {

const std::vector<NodeId> WeightedGraph::kEmpty;

double WeightedGraph::weight(NodeId v) const {
    auto it = weights_.find(v);
    if (it == weights_.end()) throw UnknownNodeError(v);
    return it->second;
}

std::vector<NodeId> WeightedGraph::node_ids() const {
    std::vector<NodeId> ids;
    ids.reserve(weights_.size());
    for (const auto& [id, w] : weights_) ids.push_back(id);
    return ids;
}

const std::vector<NodeId>& WeightedGraph::out_neighbors(NodeId v) const {
    if (!has_node(v)) throw UnknownNodeError(v);
    auto it = forward_.find(v);
    return it == forward_.end() ? kEmpty : it->second;
}

const std::vector<NodeId>& WeightedGraph::in_neighbors(NodeId v) const {
    if (!has_node(v)) throw UnknownNodeError(v);
    auto it = reverse_.find(v);
    return it == reverse_.end() ? kEmpty : it->second;
}

std::vector<NodeId> WeightedGraph::neighbors(NodeId v, Direction dir) const {
    const auto& fwd = out_neighbors(v);
    if (dir == Direction::directed) return fwd;
    std::vector<NodeId> result = fwd;
    std::unordered_set<NodeId> seen(fwd.begin(), fwd.end());
    for (NodeId u : in_neighbors(v)) {
        if (seen.insert(u).second) result.push_back(u);
    }
    return result;
}

bool WeightedGraph::operator==(const WeightedGraph& other) const {
    if (weights_.size() != other.weights_.size() || edges_ != other.edges_) return false;
    for (const auto& [id, w] : weights_) {
        auto it = other.weights_.find(id);
        if (it == other.weights_.end() || std::fabs(it->second - w) > kWeightTolerance)
            return false;
    }
    return true;
}

WeightedGraph::Builder& WeightedGraph::Builder::add_node(NodeId id, double weight) {
    if (!std::isfinite(weight) || weight < 0)
        throw GraphError("node " + std::to_string(id) + ": weight must be finite and >= 0");
    auto [it, inserted] = g_.weights_.emplace(id, weight);
    if (!inserted) {
        if (std::fabs(it->second - weight) > kWeightTolerance)
            throw GraphError("node " + std::to_string(id) + ": conflicting weights " +
                             format_weight(it->second) + " and " + format_weight(weight));
        return *this;
    }
    if (weight > 1.0) ++g_.range_warnings_;
    return *this;
}

WeightedGraph::Builder& WeightedGraph::Builder::add_edge(NodeId from, double from_weight,
                                                         NodeId to, double to_weight) {
    add_node(from, from_weight);
    add_node(to, to_weight);
    return add_edge(from, to);
}

WeightedGraph::Builder& WeightedGraph::Builder::add_edge(NodeId from, NodeId to) {
    if (from == to)
        throw GraphError("self-loop on node " + std::to_string(from));
    if (!g_.has_node(from)) throw UnknownNodeError(from);
    if (!g_.has_node(to)) throw UnknownNodeError(to);
    if (!seen_edges_.emplace(from, to).second) {
        ++g_.duplicates_;
        return *this;
    }
    g_.edges_.emplace_back(from, to);
    g_.forward_[from].push_back(to);
    g_.reverse_[to].push_back(from);
    return *this;
}

WeightedGraph WeightedGraph::Builder::build() { return std::move(g_); }

namespace {

struct Token {
    NodeId id;
    double weight;
};

Token parse_token(const std::string& tok, int line) {
    auto bar = tok.find('|');
    auto fail = [&] {
        throw ParseError(ParseError::Kind::malformed_token, line, tok,
                         "expected <int>|<decimal>");
    };
    if (bar == std::string::npos || bar == 0 || bar + 1 == tok.size()) fail();
    NodeId id = 0;
    double w = 0;
    std::size_t pos = 0;
    try {
        id = std::stoi(tok.substr(0, bar), &pos);
    } catch (const std::exception&) {
        fail();
    }
    if (pos != bar || id <= 0) fail();
    const std::string wtext = tok.substr(bar + 1);
    try {
        w = std::stod(wtext, &pos);
    } catch (const std::exception&) {
        fail();
    }
    if (pos != wtext.size() || !std::isfinite(w) || w < 0) fail();
    return {id, w};
}

}  // namespace

WeightedGraph parse_edge_list(const std::string& text) {
    WeightedGraph::Builder builder;
    std::istringstream input(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(input, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::size_t first = raw.find_first_not_of(" \t");
        if (first == std::string::npos || raw[first] == '#') continue;

        std::istringstream fields(raw);
        std::vector<std::string> toks;
        for (std::string t; fields >> t;) toks.push_back(t);

        if (toks.size() == 1) {
            Token n = parse_token(toks[0], line_no);
            try {
                builder.add_node(n.id, n.weight);
            } catch (const GraphError& e) {
                throw ParseError(ParseError::Kind::weight_conflict, line_no, toks[0], e.what());
            }
            continue;
        }
        if (toks.size() % 2 != 0)
            throw ParseError(ParseError::Kind::malformed_token, line_no, toks.back(),
                             "dangling token, edges need two node tokens");
        for (std::size_t i = 0; i < toks.size(); i += 2) {
            Token a = parse_token(toks[i], line_no);
            Token b = parse_token(toks[i + 1], line_no);
            if (a.id == b.id)
                throw ParseError(ParseError::Kind::self_loop, line_no, toks[i],
                                 "self-loop on node " + std::to_string(a.id));
            try {
                builder.add_edge(a.id, a.weight, b.id, b.weight);
            } catch (const GraphError& e) {
                throw ParseError(ParseError::Kind::weight_conflict, line_no, toks[i], e.what());
            }
        }
    }
    return builder.build();
}

std::string serialize_edge_list(const WeightedGraph& g) {
    std::string out;
    std::unordered_set<NodeId> on_edge;
    for (const auto& [u, v] : g.edges()) {
        on_edge.insert(u);
        on_edge.insert(v);
        out += std::to_string(u) + "|" + format_weight(g.weight(u)) + " " +
               std::to_string(v) + "|" + format_weight(g.weight(v)) + "\n";
    }
    for (NodeId id : g.node_ids()) {
        if (!on_edge.count(id))
            out += std::to_string(id) + "|" + format_weight(g.weight(id)) + "\n";
    }
    return out;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::set<NodeId>& keep) {
    for (NodeId v : keep)
        if (!g.has_node(v)) throw UnknownNodeError(v);
    WeightedGraph::Builder builder;
    for (NodeId v : keep) builder.add_node(v, g.weight(v));
    for (const auto& [u, v] : g.edges())
        if (keep.count(u) && keep.count(v)) builder.add_edge(u, v);
    return builder.build();
}

std::string to_dot(const WeightedGraph& g) {
    std::string out = "digraph G {\n";
    for (NodeId id : g.node_ids()) {
        out += "  " + std::to_string(id) + " [label=\"" + std::to_string(id) + " (" +
               format_weight(g.weight(id)) + ")\"];\n";
    }
    for (const auto& [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

std::string format_weight(double w) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, w);
        if (std::strtod(buf, nullptr) == w) break;
    }
    return buf;
}

}  // namespace graphsearch
