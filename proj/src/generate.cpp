#include "ogl/generate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ogl/errors.hpp"
#include "ogl/kernels.hpp"

namespace ogl {

namespace {

// Scratch reused across layers: identity permutation with swap-undo, and a
// uniform buffer for the batched Bernoulli draws.
struct GenScratch {
    std::vector<std::uint32_t> perm;
    std::vector<std::uint32_t> swaps;
    std::vector<std::uint64_t> uniforms;

    explicit GenScratch(std::uint32_t n) : perm(n) {
        std::iota(perm.begin(), perm.end(), 0u);
    }
};

// Realizes layer k. Edges are appended to keys (packed u<v) and, when
// sink != nullptr, also materialized there. Draw order per layer: (x, y),
// then x subset draws, then binom(x,2) edge uniforms.
LayerSample realize_layer(const ModelParams& p, std::uint64_t k, GenScratch& sc,
                          std::vector<std::uint64_t>* keys, LayerRealization* sink) {
    RandomStream rs(child_seed(p.seed, k));
    LayerSample ls = p.dist.sample(rs);
    if (ls.x > p.n)
        throw guard_error("layer " + std::to_string(k) + ": sampled size " +
                          std::to_string(ls.x) + " exceeds n=" + std::to_string(p.n));

    std::uint32_t x = ls.x;
    sc.swaps.clear();
    for (std::uint32_t i = 0; i < x; ++i) {
        std::uint32_t j = i + rs.next_bounded(p.n - i);
        std::swap(sc.perm[i], sc.perm[j]);
        sc.swaps.push_back(j);
    }

    if (sink) {
        sink->index = k;
        sink->type = ls;
        sink->nodes.assign(sc.perm.begin(), sc.perm.begin() + x);
        sink->edges.clear();
    }

    std::uint64_t npairs = static_cast<std::uint64_t>(x) * (x - (x > 0)) / 2;
    sc.uniforms.resize(npairs);
    kernels::mix64_fill(rs.key(), rs.counter(), sc.uniforms.data(), npairs);
    rs.advance(npairs);

    std::size_t idx = 0;
    for (std::uint32_t i = 0; i < x; ++i) {
        for (std::uint32_t j = i + 1; j < x; ++j) {
            if (RandomStream::to_unit_double(sc.uniforms[idx++]) < ls.y) {
                std::uint32_t u = sc.perm[i], v = sc.perm[j];
                if (u > v) std::swap(u, v);
                if (keys) keys->push_back((static_cast<std::uint64_t>(u) << 32) | v);
                if (sink) sink->edges.emplace_back(u, v);
            }
        }
    }

    // undo the partial shuffle so perm is identity again
    for (std::uint32_t i = x; i-- > 0;) std::swap(sc.perm[i], sc.perm[sc.swaps[i]]);
    return ls;
}

}  // namespace

Graph generate(const ModelParams& params) {
    GenScratch sc(params.n);
    std::vector<std::uint64_t> keys;
    for (std::uint64_t k = 0; k < params.m; ++k)
        realize_layer(params, k, sc, &keys, nullptr);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return Graph::from_sorted_keys(params.n, keys);
}

std::vector<LayerRealization> generate_layers(const ModelParams& params) {
    GenScratch sc(params.n);
    std::vector<LayerRealization> layers(params.m);
    for (std::uint64_t k = 0; k < params.m; ++k)
        realize_layer(params, k, sc, nullptr, &layers[k]);
    return layers;
}

}  // namespace ogl
