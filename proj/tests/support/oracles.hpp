#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// direct definition-level enumerations and exhaustive tiny-model computations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "ogl/combinatorics.hpp"
#include "ogl/graph.hpp"
#include "ogl/layer_dist.hpp"
#include "ogl/pattern.hpp"
#include "ogl/rng.hpp"

namespace oracle {

// U(R) straight from the definition: sum over all m^s mappings
// edge -> layer of prod_k (pi)_{||preimage||,|preimage|} / (n)_{||preimage||}.
inline double direct_U(const ogl::SubgraphPattern& p, std::uint32_t n, std::uint64_t m,
                       const ogl::LayerDistribution& dist) {
    int s = p.edge_count();
    const auto& edges = p.edges();
    if (m == 0) return s == 0 ? 1.0 : 0.0;
    std::uint64_t total_maps = 1;
    for (int e = 0; e < s; ++e) total_maps *= m;

    double total = 0.0;
    std::vector<std::uint64_t> phi(static_cast<std::size_t>(s));
    for (std::uint64_t code = 0; code < total_maps; ++code) {
        std::uint64_t v = code;
        for (int e = 0; e < s; ++e) {
            phi[static_cast<std::size_t>(e)] = v % m;
            v /= m;
        }
        double prod = 1.0;
        for (std::uint64_t layer = 0; layer < m; ++layer) {
            std::vector<std::uint32_t> nodes;
            int cnt = 0;
            for (int e = 0; e < s; ++e) {
                if (phi[static_cast<std::size_t>(e)] != layer) continue;
                ++cnt;
                nodes.push_back(edges[static_cast<std::size_t>(e)].first);
                nodes.push_back(edges[static_cast<std::size_t>(e)].second);
            }
            if (cnt == 0) continue;
            std::sort(nodes.begin(), nodes.end());
            nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
            int norm = static_cast<int>(nodes.size());
            prod *= dist.cross_moment(norm, cnt) / ogl::falling_factorial(n, norm);
        }
        total += prod;
    }
    return total;
}

// Exhaustive f(R) = Pr(G contains R at a fixed placement) for m layers of a
// point mass at size x with strength 1: every layer is a complete graph on a
// uniform x-subset, so joint realizations = all C(n,x)^m subset choices.
// The pattern sits on nodes 0..r-1.
inline double exhaustive_f_pointmass_y1(const ogl::SubgraphPattern& p, std::uint32_t n,
                                        std::uint32_t x, int m) {
    std::vector<std::vector<std::uint32_t>> subsets;
    std::vector<std::uint32_t> pick(x);
    std::iota(pick.begin(), pick.end(), 0u);
    // all x-subsets of [n]
    while (true) {
        subsets.push_back(pick);
        int i = static_cast<int>(x) - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] ==
                             n - x + static_cast<std::uint32_t>(i))
            --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < x; ++j)
            pick[j] = pick[j - 1] + 1;
    }

    const auto& pedges = p.edges();
    std::uint64_t hits = 0, total = 0;
    std::vector<std::size_t> choice(static_cast<std::size_t>(m), 0);
    while (true) {
        ++total;
        bool contains = true;
        for (auto [u, v] : pedges) {
            bool covered = false;
            for (int k = 0; k < m && !covered; ++k) {
                const auto& sub = subsets[choice[static_cast<std::size_t>(k)]];
                covered = std::binary_search(sub.begin(), sub.end(), u) &&
                          std::binary_search(sub.begin(), sub.end(), v);
            }
            if (!covered) {
                contains = false;
                break;
            }
        }
        hits += contains;
        int k = m - 1;
        while (k >= 0 && ++choice[static_cast<std::size_t>(k)] == subsets.size()) {
            choice[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return static_cast<double>(hits) / static_cast<double>(total);
}

// All connected graphs with exactly s edges, one per isomorphism class,
// as custom patterns (plus the clique/cycle specials where they apply).
inline std::vector<ogl::SubgraphPattern> connected_patterns_with_edges(int s) {
    std::vector<ogl::SubgraphPattern> out;
    std::map<std::vector<std::uint64_t>, bool> seen;
    for (int r = 2; r <= s + 1; ++r) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> all_pairs;
        for (std::uint32_t u = 0; u < static_cast<std::uint32_t>(r); ++u)
            for (std::uint32_t v = u + 1; v < static_cast<std::uint32_t>(r); ++v)
                all_pairs.emplace_back(u, v);
        int np = static_cast<int>(all_pairs.size());
        if (s > np) continue;

        std::vector<int> idx(static_cast<std::size_t>(s));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            // adjacency rows from the chosen pairs
            std::vector<std::uint16_t> adj(static_cast<std::size_t>(r), 0);
            for (int i : idx) {
                auto [u, v] = all_pairs[static_cast<std::size_t>(i)];
                adj[u] |= static_cast<std::uint16_t>(1u << v);
                adj[v] |= static_cast<std::uint16_t>(1u << u);
            }
            bool no_isolated = true;
            for (int v = 0; v < r; ++v)
                if (!adj[static_cast<std::size_t>(v)]) no_isolated = false;
            if (no_isolated) {
                // connectivity by mask expansion
                std::uint16_t comp = 1, prev = 0;
                while (comp != prev) {
                    prev = comp;
                    for (int v = 0; v < r; ++v)
                        if (comp & (1u << v)) comp |= adj[static_cast<std::size_t>(v)];
                }
                if (comp == (1u << r) - 1) {
                    // canonical form: lexicographically minimal adjacency rows
                    std::vector<int> perm(static_cast<std::size_t>(r));
                    std::iota(perm.begin(), perm.end(), 0);
                    std::vector<std::uint64_t> best;
                    do {
                        std::vector<std::uint64_t> rows(static_cast<std::size_t>(r), 0);
                        for (int u = 0; u < r; ++u)
                            for (int v = 0; v < r; ++v)
                                if (adj[static_cast<std::size_t>(u)] & (1u << v))
                                    rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] |=
                                        (1ull << perm[static_cast<std::size_t>(v)]);
                        if (best.empty() || rows < best) best = rows;
                    } while (std::next_permutation(perm.begin(), perm.end()));
                    if (!seen.count(best)) {
                        seen[best] = true;
                        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
                        for (int i : idx) edges.push_back(all_pairs[static_cast<std::size_t>(i)]);
                        out.push_back(ogl::SubgraphPattern::custom(edges));
                    }
                }
            }
            // next s-combination of pair indices
            int i = s - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == np - s + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

inline ogl::Graph petersen() {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer C5
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    return ogl::Graph::from_edges(10, edges);
}

inline ogl::Graph complete_graph(std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return ogl::Graph::from_edges(n, edges);
}

inline ogl::Graph gnp(std::uint32_t n, double p, ogl::RandomStream& rng) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (rng.next_double() < p) edges.emplace_back(u, v);
    return ogl::Graph::from_edges(n, edges);
}

}  // namespace oracle
