#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graphsearch/graph.hpp"

namespace graphsearch {

// Fixed, portable 64-bit generator (splitmix64). Golden tests rely on the
// byte-identical stream, so the algorithm is pinned here and never swapped
// for std::mt19937 or platform RNGs.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

struct InvalidSpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct WeightDist {
    enum class Kind { uniform01, fixed };
    Kind kind = Kind::uniform01;
    double fixed_value = 0.5;

    static WeightDist uniform01() { return {Kind::uniform01, 0.0}; }
    static WeightDist fixed(double c) { return {Kind::fixed, c}; }
};

struct GenSpec {
    enum class Kind { erdos_renyi, barabasi_albert, chain, layered };
    Kind kind = Kind::erdos_renyi;
    std::size_t n = 1;       // erdos_renyi, barabasi_albert, chain
    double p = 0.0;          // erdos_renyi
    std::size_t m = 1;       // barabasi_albert
    std::size_t levels = 1;  // layered
    std::size_t width = 1;   // layered
    std::uint64_t seed = 0;
    WeightDist weight_dist = WeightDist::uniform01();

    static GenSpec erdos_renyi_spec(std::size_t n, double p, std::uint64_t seed,
                                    WeightDist dist = WeightDist::uniform01());
    static GenSpec barabasi_albert_spec(std::size_t n, std::size_t m, std::uint64_t seed,
                                        WeightDist dist = WeightDist::uniform01());
    static GenSpec chain_spec(std::size_t n, std::uint64_t seed,
                              WeightDist dist = WeightDist::uniform01());
    static GenSpec layered_spec(std::size_t levels, std::size_t width, std::uint64_t seed,
                                WeightDist dist = WeightDist::uniform01());
};

// Deterministic for a given spec; throws InvalidSpecError on bad parameters.
WeightedGraph generate(const GenSpec& spec);

// Same topology, weights redrawn in ascending node-id order.
WeightedGraph assign_weights(const WeightedGraph& g, const WeightDist& dist, std::uint64_t seed);

// Erdos-Renyi edge kernel, exposed in both variants. Each source node owns
// an independent substream, so the parallel kernel emits the exact edge
// list the serial one does.
std::vector<std::pair<NodeId, NodeId>> erdos_renyi_edges_serial(std::size_t n, double p,
                                                                std::uint64_t seed);
std::vector<std::pair<NodeId, NodeId>> erdos_renyi_edges_parallel(std::size_t n, double p,
                                                                  std::uint64_t seed);

}  // namespace graphsearch
