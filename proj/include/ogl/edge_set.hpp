#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "ogl/errors.hpp"

namespace ogl {

// A set of unordered node pairs. Pairs are stored normalized (u < v) and
// sorted; inserting twice is a no-op.
class EdgeSet {
public:
    using Edge = std::pair<std::uint32_t, std::uint32_t>;

    EdgeSet() = default;
    explicit EdgeSet(std::vector<Edge> edges) {
        for (auto [u, v] : edges) insert(u, v);
    }

    void insert(std::uint32_t u, std::uint32_t v) {
        if (u == v) throw config_error("EdgeSet: self-loop");
        if (u > v) std::swap(u, v);
        Edge e{u, v};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) edges_.insert(it, e);
    }

    bool contains(std::uint32_t u, std::uint32_t v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    const std::vector<Edge>& edges() const { return edges_; }

    // The number of distinct endpoints, ||E||.
    std::size_t incident_node_count() const {
        std::vector<std::uint32_t> nodes;
        nodes.reserve(2 * edges_.size());
        for (auto [u, v] : edges_) {
            nodes.push_back(u);
            nodes.push_back(v);
        }
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        return nodes.size();
    }

    bool is_subset_of(const EdgeSet& other) const {
        return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(),
                             edges_.end());
    }

    friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
        return a.edges_ == b.edges_;
    }

private:
    std::vector<Edge> edges_;
};

inline std::size_t incident_node_count(const EdgeSet& e) {
    return e.incident_node_count();
}

}  // namespace ogl
