#include "ogl/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "ogl/errors.hpp"

namespace ogl {

namespace {

std::uint64_t edge_key(std::uint32_t u, std::uint32_t v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Graph Graph::from_edges(std::uint32_t n,
                        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    std::vector<std::uint64_t> keys;
    keys.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw config_error("self-loop at node " + std::to_string(u));
        if (u >= n || v >= n)
            throw config_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") out of range for n=" + std::to_string(n));
        keys.push_back(edge_key(u, v));
    }
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
        throw config_error("duplicate edge in edge list");
    return from_sorted_keys(n, keys);
}

Graph Graph::from_sorted_keys(std::uint32_t n, const std::vector<std::uint64_t>& keys) {
    Graph g;
    g.n_ = n;
    g.m_ = keys.size();
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t k : keys) {
        ++g.offsets_[(k >> 32) + 1];
        ++g.offsets_[(k & 0xFFFFFFFFu) + 1];
    }
    for (std::uint32_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.adj_.resize(2 * keys.size());
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (std::uint64_t k : keys) {
        auto u = static_cast<std::uint32_t>(k >> 32);
        auto v = static_cast<std::uint32_t>(k & 0xFFFFFFFFu);
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (std::uint32_t v = 0; v < n; ++v)
        std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    return g;
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
    if (u >= n_ || v >= n_) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(m_);
    for (std::uint32_t u = 0; u < n_; ++u)
        for (std::uint32_t v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::uint64_t lineno = 0;

    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        if (required) throw config_error("edge list: unexpected end of file");
        return false;
    };

    next_line(true);
    std::uint64_t n = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw config_error("edge list line " + std::to_string(lineno) +
                               ": expected header \"n m\"");
    }
    if (n > 0xFFFFFFFFull)
        throw config_error("edge list: n too large");

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(m);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(m * 2);
    for (std::uint64_t i = 0; i < m; ++i) {
        next_line(true);
        std::istringstream ls(line);
        std::int64_t u = -1, v = -1;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw config_error("edge list line " + std::to_string(lineno) +
                               ": expected \"u v\"");
        if (u < 0 || v < 0 || u >= static_cast<std::int64_t>(n) ||
            v >= static_cast<std::int64_t>(n))
            throw config_error("edge list line " + std::to_string(lineno) +
                               ": node id out of range [0," + std::to_string(n) + ")");
        if (u == v)
            throw config_error("edge list line " + std::to_string(lineno) + ": self-loop");
        auto uu = static_cast<std::uint32_t>(u), vv = static_cast<std::uint32_t>(v);
        std::uint64_t key = (static_cast<std::uint64_t>(std::min(uu, vv)) << 32) |
                            std::max(uu, vv);
        if (!seen.insert(key).second)
            throw config_error("edge list line " + std::to_string(lineno) +
                               ": duplicate edge");
        edges.emplace_back(uu, vv);
    }
    if (next_line(false))
        throw config_error("edge list line " + std::to_string(lineno) +
                           ": trailing content after " + std::to_string(m) + " edges");
    return Graph::from_edges(static_cast<std::uint32_t>(n), std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open edge list: " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (std::uint32_t u = 0; u < g.node_count(); ++u)
        for (std::uint32_t v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot open output file: " + path);
    write_edge_list(g, out);
    if (!out) throw config_error("failed writing: " + path);
}

}  // namespace ogl
