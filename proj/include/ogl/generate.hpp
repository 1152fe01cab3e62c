#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ogl/graph.hpp"
#include "ogl/layer_dist.hpp"

namespace ogl {

struct ModelParams {
    std::uint32_t n = 0;
    std::uint64_t m = 0;
    LayerDistribution dist = LayerDistribution::point_mass(0, 0.0);
    std::uint64_t seed = 0;
};

struct LayerRealization {
    std::uint64_t index;
    LayerSample type;
    std::vector<std::uint32_t> nodes;  // sampled order
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // u < v
};

// Samples the union graph: m independent layers; layer k draws (x, y) from
// dist, a uniform x-subset of [n] (partial Fisher-Yates), and each of the
// binom(x,2) pairs as an edge with probability y. Layer k's randomness comes
// from child_seed(seed, k), so output is independent of evaluation order.
// Throws guard_error if a sampled layer size exceeds n.
Graph generate(const ModelParams& params);

// The full layer decomposition; under the same seed its union equals
// generate(params).
std::vector<LayerRealization> generate_layers(const ModelParams& params);

}  // namespace ogl
