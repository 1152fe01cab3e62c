#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ogl {

// Immutable simple undirected graph on nodes 0..n-1 with sorted adjacency.
// Safe to share read-only across threads.
class Graph {
public:
    Graph() = default;

    // Validates: ids in [0,n), no self-loops; duplicate edges rejected.
    // Input order and orientation are irrelevant.
    static Graph from_edges(std::uint32_t n,
                            std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

    // Fast path for the generator: keys are (u << 32) | v with u < v,
    // already sorted and deduplicated.
    static Graph from_sorted_keys(std::uint32_t n, const std::vector<std::uint64_t>& keys);

    std::uint32_t node_count() const { return n_; }
    std::uint64_t edge_count() const { return m_; }

    std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::uint32_t degree(std::uint32_t v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }
    bool has_edge(std::uint32_t u, std::uint32_t v) const;

    // All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

private:
    std::uint32_t n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> offsets_;  // n+1
    std::vector<std::uint32_t> adj_;      // 2m, each list ascending
};

// Edge-list text format: first line "n m", then one "u v" per line (0-based,
// each edge once in either orientation). Errors name the offending line.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace ogl
