#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ogl {

enum class PatternKind { clique, cycle, custom };

// A small pattern graph R: clique K_r, cycle C_r, or an arbitrary graph on
// at most 8 nodes given by its edge list. Custom node labels are normalized
// to 0..r-1. Immutable.
class SubgraphPattern {
public:
    static SubgraphPattern clique(int r);  // r >= 1
    static SubgraphPattern cycle(int r);   // r >= 3

    // Rejects disconnected inputs; the *_any variant allows them (used by the
    // disjoint-union lemma checker). Both cap at 8 nodes.
    static SubgraphPattern custom(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);
    static SubgraphPattern custom_any(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

    PatternKind kind() const { return kind_; }
    int node_count() const { return r_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::uint64_t automorphisms() const { return aut_; }
    bool connected() const { return connected_; }

    // Edges over nodes 0..r-1, normalized (u < v) and sorted.
    const std::vector<std::pair<std::uint8_t, std::uint8_t>>& edges() const { return edges_; }

    // "clique:4", "cycle:5", "custom:0-1;1-2"
    const std::string& name() const { return name_; }

private:
    SubgraphPattern() = default;

    PatternKind kind_ = PatternKind::custom;
    int r_ = 0;
    std::uint64_t aut_ = 1;
    bool connected_ = true;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> edges_;
    std::string name_;
};

std::uint64_t automorphism_count(const SubgraphPattern& p);

// Parses "clique:R", "cycle:R", or "custom:u-v;u-v;...".
SubgraphPattern parse_pattern(const std::string& spec);

}  // namespace ogl
