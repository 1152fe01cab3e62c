#pragma once

#include <cstdint>

#include "ogl/graph.hpp"
#include "ogl/pattern.hpp"

namespace ogl {

struct CountResult {
    SubgraphPattern pattern;
    std::uint64_t count = 0;
    double elapsed_ms = 0.0;
};

// Exact number of r-cliques. r=1 is the node count, r=2 the edge count;
// r >= 3 runs degeneracy-ordered forward-neighborhood intersection.
CountResult count_cliques(const Graph& g, int r);

// Exact number of simple r-cycles, each counted once. 3 <= r <= r_max.
CountResult count_cycles(const Graph& g, int r, int r_max = 8);

// N_R(G) = (#edge-preserving injective maps V(R) -> V(G)) / |Aut(R)|.
// Guard: g has <= 12 nodes or the pattern has <= 3 nodes.
CountResult count_pattern_bruteforce(const Graph& g, const SubgraphPattern& pattern);

// Specialized counter when one exists, brute force otherwise.
CountResult count_pattern(const Graph& g, const SubgraphPattern& pattern);

}  // namespace ogl
