#include "graphsearch/gen.hpp"

#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace graphsearch {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    SplitMix64 rng(seed ^ (salt * 0xD1B54A32D192ED03ULL));
    return rng.next();
}

namespace {

constexpr std::uint64_t kWeightSalt = 0x5745494748545353ULL;

double draw_weight(const WeightDist& dist, SplitMix64& rng) {
    return dist.kind == WeightDist::Kind::uniform01 ? rng.next_unit() : dist.fixed_value;
}

void validate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenSpec::Kind::erdos_renyi:
            if (spec.n < 1) throw InvalidSpecError("erdos_renyi: n must be >= 1");
            if (spec.p < 0.0 || spec.p > 1.0)
                throw InvalidSpecError("erdos_renyi: p must be in [0, 1]");
            break;
        case GenSpec::Kind::barabasi_albert:
            if (spec.n < 1) throw InvalidSpecError("barabasi_albert: n must be >= 1");
            if (spec.m < 1 || spec.m >= spec.n)
                throw InvalidSpecError("barabasi_albert: need 1 <= m < n");
            break;
        case GenSpec::Kind::chain:
            if (spec.n < 1) throw InvalidSpecError("chain: n must be >= 1");
            break;
        case GenSpec::Kind::layered:
            if (spec.levels < 1 || spec.width < 1)
                throw InvalidSpecError("layered: levels and width must be >= 1");
            break;
    }
    if (spec.weight_dist.kind == WeightDist::Kind::fixed &&
        !(spec.weight_dist.fixed_value >= 0.0))
        throw InvalidSpecError("fixed weight must be >= 0");
}

void row_edges(std::size_t n, double p, std::uint64_t seed, NodeId u,
               std::vector<std::pair<NodeId, NodeId>>& out) {
    SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(u)));
    for (NodeId v = 1; v <= static_cast<NodeId>(n); ++v) {
        if (v == u) continue;
        if (rng.next_unit() < p) out.emplace_back(u, v);
    }
}

WeightedGraph build_graph(std::size_t node_count,
                          const std::vector<std::pair<NodeId, NodeId>>& edges,
                          const WeightDist& dist, std::uint64_t seed) {
    SplitMix64 wrng(mix_seed(seed, kWeightSalt));
    WeightedGraph::Builder builder;
    for (NodeId id = 1; id <= static_cast<NodeId>(node_count); ++id)
        builder.add_node(id, draw_weight(dist, wrng));
    for (const auto& [u, v] : edges) builder.add_edge(u, v);
    return builder.build();
}

std::vector<std::pair<NodeId, NodeId>> barabasi_albert_edges(std::size_t n, std::size_t m,
                                                             std::uint64_t seed) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<std::uint64_t> degree(n + 1, 0);
    // Complete directed clique on the first m nodes.
    for (NodeId u = 1; u <= static_cast<NodeId>(m); ++u)
        for (NodeId v = 1; v <= static_cast<NodeId>(m); ++v)
            if (u != v) {
                edges.emplace_back(u, v);
                ++degree[u];
                ++degree[v];
            }
    SplitMix64 rng(mix_seed(seed, 0xBA00BA00BA00BA00ULL));
    for (NodeId k = static_cast<NodeId>(m) + 1; k <= static_cast<NodeId>(n); ++k) {
        std::uint64_t total = std::accumulate(degree.begin(), degree.begin() + k, 0ULL);
        std::vector<bool> chosen(k, false);
        for (std::size_t attached = 0; attached < m;) {
            NodeId target;
            if (total == 0) {
                // Degenerate start (m == 1): fall back to uniform choice.
                target = static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(k - 1)) + 1);
            } else {
                std::uint64_t r = rng.next_below(total);
                NodeId t = 1;
                while (r >= degree[t]) {
                    r -= degree[t];
                    ++t;
                }
                target = t;
            }
            if (chosen[target]) continue;  // multi-edge, redraw
            chosen[target] = true;
            edges.emplace_back(k, target);
            ++degree[k];
            ++degree[target];
            ++attached;
        }
    }
    return edges;
}

}  // namespace

GenSpec GenSpec::erdos_renyi_spec(std::size_t n, double p, std::uint64_t seed, WeightDist dist) {
    GenSpec s;
    s.kind = Kind::erdos_renyi;
    s.n = n;
    s.p = p;
    s.seed = seed;
    s.weight_dist = dist;
    return s;
}

GenSpec GenSpec::barabasi_albert_spec(std::size_t n, std::size_t m, std::uint64_t seed,
                                      WeightDist dist) {
    GenSpec s;
    s.kind = Kind::barabasi_albert;
    s.n = n;
    s.m = m;
    s.seed = seed;
    s.weight_dist = dist;
    return s;
}

GenSpec GenSpec::chain_spec(std::size_t n, std::uint64_t seed, WeightDist dist) {
    GenSpec s;
    s.kind = Kind::chain;
    s.n = n;
    s.seed = seed;
    s.weight_dist = dist;
    return s;
}

GenSpec GenSpec::layered_spec(std::size_t levels, std::size_t width, std::uint64_t seed,
                              WeightDist dist) {
    GenSpec s;
    s.kind = Kind::layered;
    s.levels = levels;
    s.width = width;
    s.seed = seed;
    s.weight_dist = dist;
    return s;
}

std::vector<std::pair<NodeId, NodeId>> erdos_renyi_edges_serial(std::size_t n, double p,
                                                                std::uint64_t seed) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 1; u <= static_cast<NodeId>(n); ++u) row_edges(n, p, seed, u, edges);
    return edges;
}

std::vector<std::pair<NodeId, NodeId>> erdos_renyi_edges_parallel(std::size_t n, double p,
                                                                  std::uint64_t seed) {
    std::vector<std::vector<std::pair<NodeId, NodeId>>> rows(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::size_t i = 0; i < n; ++i)
        row_edges(n, p, seed, static_cast<NodeId>(i + 1), rows[i]);

    std::size_t total = 0;
    for (const auto& r : rows) total += r.size();
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(total);
    for (const auto& r : rows) edges.insert(edges.end(), r.begin(), r.end());
    return edges;
}

WeightedGraph generate(const GenSpec& spec) {
    validate(spec);
    switch (spec.kind) {
        case GenSpec::Kind::erdos_renyi:
            return build_graph(spec.n, erdos_renyi_edges_parallel(spec.n, spec.p, spec.seed),
                               spec.weight_dist, spec.seed);
        case GenSpec::Kind::barabasi_albert:
            return build_graph(spec.n, barabasi_albert_edges(spec.n, spec.m, spec.seed),
                               spec.weight_dist, spec.seed);
        case GenSpec::Kind::chain: {
            std::vector<std::pair<NodeId, NodeId>> edges;
            for (NodeId u = 1; u + 1 <= static_cast<NodeId>(spec.n); ++u)
                edges.emplace_back(u, u + 1);
            return build_graph(spec.n, edges, spec.weight_dist, spec.seed);
        }
        case GenSpec::Kind::layered: {
            std::vector<std::pair<NodeId, NodeId>> edges;
            const NodeId w = static_cast<NodeId>(spec.width);
            for (std::size_t level = 0; level + 1 < spec.levels; ++level) {
                NodeId base = static_cast<NodeId>(level) * w;
                for (NodeId a = 1; a <= w; ++a)
                    for (NodeId b = 1; b <= w; ++b)
                        edges.emplace_back(base + a, base + w + b);
            }
            return build_graph(spec.levels * spec.width, edges, spec.weight_dist, spec.seed);
        }
    }
    throw InvalidSpecError("unreachable generator kind");
}

WeightedGraph assign_weights(const WeightedGraph& g, const WeightDist& dist, std::uint64_t seed) {
    SplitMix64 wrng(mix_seed(seed, kWeightSalt));
    WeightedGraph::Builder builder;
    for (NodeId id : g.node_ids()) builder.add_node(id, draw_weight(dist, wrng));
    for (const auto& [u, v] : g.edges()) builder.add_edge(u, v);
    return builder.build();
}

}  // namespace graphsearch
