#include "ogl/pattern.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

#include "ogl/combinatorics.hpp"
#include "ogl/errors.hpp"

namespace ogl {

namespace {

constexpr int kMaxCustomNodes = 8;

using EdgeList8 = std::vector<std::pair<std::uint8_t, std::uint8_t>>;

// Brute-force |Aut(R)| over all r! vertex permutations, r <= 8. A bijection
// mapping every edge onto an edge is automatically edge-surjective, so
// checking edges suffices.
std::uint64_t count_automorphisms(int r, const EdgeList8& edges) {
    std::array<std::uint8_t, kMaxCustomNodes> adj{};
    for (auto [u, v] : edges) {
        adj[u] |= static_cast<std::uint8_t>(1u << v);
        adj[v] |= static_cast<std::uint8_t>(1u << u);
    }
    std::array<int, kMaxCustomNodes> perm{};
    std::iota(perm.begin(), perm.begin() + r, 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (auto [u, v] : edges) {
            if (!(adj[perm[u]] & (1u << perm[v]))) {
                ok = false;
                break;
            }
        }
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.begin() + r));
    return count;
}

bool is_connected(int r, const EdgeList8& edges) {
    if (r <= 1) return true;
    std::array<int, kMaxCustomNodes> parent{};
    std::iota(parent.begin(), parent.begin() + r, 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges) parent[find(u)] = find(v);
    for (int v = 1; v < r; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

// Densify labels, normalize orientations, sort, reject self-loops/duplicates.
EdgeList8 normalize_custom_edges(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& raw, int& r_out) {
    if (raw.empty()) throw config_error("custom pattern requires at least one edge");
    std::map<std::uint32_t, std::uint8_t> relabel;
    for (auto [u, v] : raw) {
        if (u == v) throw config_error("custom pattern: self-loop");
        relabel.emplace(u, 0);
        relabel.emplace(v, 0);
    }
    if (relabel.size() > kMaxCustomNodes)
        throw guard_error("custom pattern exceeds 8 nodes");
    std::uint8_t next = 0;
    for (auto& [id, lab] : relabel) lab = next++;

    EdgeList8 edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw) {
        std::uint8_t a = relabel[u], b = relabel[v];
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw config_error("custom pattern: duplicate edge");
    r_out = static_cast<int>(relabel.size());
    return edges;
}

}  // namespace

SubgraphPattern SubgraphPattern::clique(int r) {
    if (r < 1) throw config_error("clique pattern requires r >= 1");
    if (r > 20) throw guard_error("clique pattern too large (r > 20)");
    SubgraphPattern p;
    p.kind_ = PatternKind::clique;
    p.r_ = r;
    p.aut_ = factorial_u64(r);
    p.connected_ = true;
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v)
            p.edges_.emplace_back(static_cast<std::uint8_t>(u),
                                  static_cast<std::uint8_t>(v));
    p.name_ = "clique:" + std::to_string(r);
    return p;
}

SubgraphPattern SubgraphPattern::cycle(int r) {
    if (r < 3) throw config_error("cycle pattern requires r >= 3");
    if (r > 255) throw guard_error("cycle pattern too large");
    SubgraphPattern p;
    p.kind_ = PatternKind::cycle;
    p.r_ = r;
    p.aut_ = 2ull * static_cast<std::uint64_t>(r);  // dihedral
    p.connected_ = true;
    for (int i = 0; i < r; ++i) {
        int j = (i + 1) % r;
        p.edges_.emplace_back(static_cast<std::uint8_t>(std::min(i, j)),
                              static_cast<std::uint8_t>(std::max(i, j)));
    }
    std::sort(p.edges_.begin(), p.edges_.end());
    p.name_ = "cycle:" + std::to_string(r);
    return p;
}

SubgraphPattern SubgraphPattern::custom(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    int r = 0;
    EdgeList8 norm = normalize_custom_edges(edges, r);
    if (!is_connected(r, norm))
        throw config_error("custom pattern must be connected");
    SubgraphPattern p;
    p.kind_ = PatternKind::custom;
    p.r_ = r;
    p.aut_ = count_automorphisms(r, norm);
    p.connected_ = true;
    p.edges_ = std::move(norm);
    std::ostringstream name;
    name << "custom:";
    for (std::size_t i = 0; i < p.edges_.size(); ++i) {
        if (i) name << ';';
        name << int(p.edges_[i].first) << '-' << int(p.edges_[i].second);
    }
    p.name_ = name.str();
    return p;
}

SubgraphPattern SubgraphPattern::custom_any(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    int r = 0;
    EdgeList8 norm = normalize_custom_edges(edges, r);
    SubgraphPattern p;
    p.kind_ = PatternKind::custom;
    p.r_ = r;
    p.aut_ = count_automorphisms(r, norm);
    p.connected_ = is_connected(r, norm);
    p.edges_ = std::move(norm);
    std::ostringstream name;
    name << "custom:";
    for (std::size_t i = 0; i < p.edges_.size(); ++i) {
        if (i) name << ';';
        name << int(p.edges_[i].first) << '-' << int(p.edges_[i].second);
    }
    p.name_ = name.str();
    return p;
}

std::uint64_t automorphism_count(const SubgraphPattern& p) { return p.automorphisms(); }

SubgraphPattern parse_pattern(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw config_error("pattern spec \"" + spec + "\": expected kind:args");
    std::string kind = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);
    if (kind == "clique" || kind == "cycle") {
        int r = 0;
        try {
            std::size_t pos = 0;
            r = std::stoi(args, &pos);
            if (pos != args.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw config_error("pattern spec \"" + spec + "\": bad node count");
        }
        return kind == "clique" ? SubgraphPattern::clique(r) : SubgraphPattern::cycle(r);
    }
    if (kind == "custom") {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
        std::istringstream ss(args);
        std::string tok;
        while (std::getline(ss, tok, ';')) {
            auto dash = tok.find('-');
            if (dash == std::string::npos)
                throw config_error("pattern spec \"" + spec + "\": expected u-v pairs");
            try {
                auto u = static_cast<std::uint32_t>(std::stoul(tok.substr(0, dash)));
                auto v = static_cast<std::uint32_t>(std::stoul(tok.substr(dash + 1)));
                edges.emplace_back(u, v);
            } catch (const std::exception&) {
                throw config_error("pattern spec \"" + spec + "\": bad edge \"" + tok + "\"");
            }
        }
        return SubgraphPattern::custom(edges);
    }
    throw config_error("pattern spec \"" + spec + "\": unknown kind \"" + kind + "\"");
}

}  // namespace ogl
