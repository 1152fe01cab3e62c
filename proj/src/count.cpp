#include "ogl/count.hpp"

#include <algorithm>
#include <chrono>
#include <span>
#include <stdexcept>
#include <vector>

#include "ogl/errors.hpp"
#include "ogl/kernels.hpp"

namespace ogl {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Batagelj-Zaversnik bucket peeling; returns removal order.
std::vector<std::uint32_t> degeneracy_order(const Graph& g) {
    std::uint32_t n = g.node_count();
    std::vector<std::uint32_t> deg(n), pos(n), vert(n), bin;
    std::uint32_t maxdeg = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        maxdeg = std::max(maxdeg, deg[v]);
    }
    bin.assign(maxdeg + 2, 0);
    for (std::uint32_t v = 0; v < n; ++v) ++bin[deg[v]];
    std::uint32_t start = 0;
    for (std::uint32_t d = 0; d <= maxdeg; ++d) {
        std::uint32_t c = bin[d];
        bin[d] = start;
        start += c;
    }
    for (std::uint32_t v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = v;
    }
    for (std::uint32_t d = maxdeg + 1; d-- > 0;) bin[d] = d == 0 ? 0 : bin[d - 1];
    bin[0] = 0;

    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t v = vert[i];
        for (std::uint32_t u : g.neighbors(v)) {
            if (deg[u] > deg[v]) {
                std::uint32_t du = deg[u], pu = pos[u];
                std::uint32_t pw = bin[du], w = vert[pw];
                if (u != w) {
                    std::swap(vert[pu], vert[pw]);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                ++bin[du];
                --deg[u];
            }
        }
    }
    return vert;
}

struct ForwardDag {
    std::vector<std::vector<std::uint32_t>> fwd;  // id-sorted later-in-order neighbors
    std::size_t max_out = 0;
};

ForwardDag build_forward_dag(const Graph& g) {
    std::uint32_t n = g.node_count();
    std::vector<std::uint32_t> order = degeneracy_order(g);
    std::vector<std::uint32_t> rank(n);
    for (std::uint32_t i = 0; i < n; ++i) rank[order[i]] = i;
    ForwardDag dag;
    dag.fwd.resize(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        auto& out = dag.fwd[v];
        for (std::uint32_t u : g.neighbors(v))
            if (rank[v] < rank[u]) out.push_back(u);
        std::sort(out.begin(), out.end());
        dag.max_out = std::max(dag.max_out, out.size());
    }
    return dag;
}

std::uint64_t clique_count_impl(const Graph& g, int r) {
    ForwardDag dag = build_forward_dag(g);
    // per-depth scratch; +8 for the AVX2 intersect's block stores
    std::vector<std::vector<std::uint32_t>> scratch(static_cast<std::size_t>(r));
    for (auto& s : scratch) s.resize(dag.max_out + 8);

    std::uint64_t total = 0;
    // counts (need)-cliques whose vertices all lie in cand
    auto rec = [&](auto&& self, std::span<const std::uint32_t> cand, int need) -> void {
        if (need == 2) {
            for (std::size_t i = 0; i < cand.size(); ++i) {
                const auto& fu = dag.fwd[cand[i]];
                total += kernels::intersect_count(cand.data(), cand.size(), fu.data(),
                                                  fu.size());
            }
            return;
        }
        auto& buf = scratch[static_cast<std::size_t>(need)];
        for (std::size_t i = 0; i < cand.size(); ++i) {
            const auto& fu = dag.fwd[cand[i]];
            std::size_t cnt = kernels::intersect(cand.data(), cand.size(), fu.data(),
                                                 fu.size(), buf.data());
            if (cnt >= static_cast<std::size_t>(need) - 1) {
                // recursion clobbers deeper scratch only
                self(self, std::span<const std::uint32_t>(buf.data(), cnt), need - 1);
            }
        }
    };

    for (std::uint32_t v = 0; v < g.node_count(); ++v) {
        const auto& fv = dag.fwd[v];
        if (fv.size() + 1 < static_cast<std::size_t>(r)) continue;
        if (r == 3) {
            for (std::size_t i = 0; i < fv.size(); ++i) {
                const auto& fu = dag.fwd[fv[i]];
                total +=
                    kernels::intersect_count(fv.data(), fv.size(), fu.data(), fu.size());
            }
        } else {
            rec(rec, std::span<const std::uint32_t>(fv.data(), fv.size()), r - 1);
        }
    }
    return total;
}

std::uint64_t cycle_count_impl(const Graph& g, int r) {
    std::uint32_t n = g.node_count();
    std::vector<int> dist(n, -1);
    std::vector<std::uint32_t> touched, queue;
    std::vector<std::uint8_t> onpath(n, 0);
    std::vector<std::uint32_t> path(static_cast<std::size_t>(r));
    std::uint64_t total = 0;

    for (std::uint32_t a = 0; a < n; ++a) {
        if (g.degree(a) < 2) continue;

        // BFS from a over nodes > a, capped at depth r-1
        touched.clear();
        queue.clear();
        dist[a] = 0;
        touched.push_back(a);
        queue.push_back(a);
        std::size_t head = 0;
        while (head < queue.size()) {
            std::uint32_t u = queue[head++];
            if (dist[u] == r - 1) break;
            for (std::uint32_t w : g.neighbors(u)) {
                if (w <= a || dist[w] >= 0) continue;
                dist[w] = dist[u] + 1;
                touched.push_back(w);
                queue.push_back(w);
            }
        }

        // DFS over simple paths a -> ... (all interior nodes > a); a path of
        // r-1 edges ending adjacent to a (dist == 1) closes a cycle. The
        // direction constraint path[1] < path[r-1] emits each cycle once.
        path[0] = a;
        onpath[a] = 1;
        auto dfs = [&](auto&& self, std::uint32_t v, int i) -> void {
            if (i == r - 1) {
                if (path[1] < v) ++total;
                return;
            }
            for (std::uint32_t w : g.neighbors(v)) {
                if (w <= a || onpath[w]) continue;
                int d = dist[w];
                if (d < 0 || d > r - i - 1) continue;
                if (i + 1 == r - 1 && d != 1) continue;
                onpath[w] = 1;
                path[static_cast<std::size_t>(i) + 1] = w;
                self(self, w, i + 1);
                onpath[w] = 0;
            }
        };
        dfs(dfs, a, 0);
        onpath[a] = 0;

        for (std::uint32_t v : touched) dist[v] = -1;
    }
    return total;
}

}  // namespace

CountResult count_cliques(const Graph& g, int r) {
    if (r < 1) throw guard_error("count_cliques: r must be >= 1");
    auto t0 = Clock::now();
    std::uint64_t c;
    if (r == 1)
        c = g.node_count();
    else if (r == 2)
        c = g.edge_count();
    else
        c = clique_count_impl(g, r);
    return {SubgraphPattern::clique(r), c, ms_since(t0)};
}

CountResult count_cycles(const Graph& g, int r, int r_max) {
    if (r < 3 || r > r_max)
        throw guard_error("count_cycles: r=" + std::to_string(r) + " outside [3," +
                          std::to_string(r_max) + "]");
    auto t0 = Clock::now();
    std::uint64_t c = cycle_count_impl(g, r);
    return {SubgraphPattern::cycle(r), c, ms_since(t0)};
}

CountResult count_pattern_bruteforce(const Graph& g, const SubgraphPattern& pattern) {
    if (g.node_count() > 12 && pattern.node_count() > 3)
        throw guard_error(
            "count_pattern_bruteforce: graph has more than 12 nodes and pattern more "
            "than 3");
    auto t0 = Clock::now();

    int r = pattern.node_count();
    const auto& pedges = pattern.edges();
    // pattern edges incident to vertex i with the other endpoint already mapped
    std::vector<std::vector<std::pair<int, int>>> checks(static_cast<std::size_t>(r));
    for (auto [u, v] : pedges) checks[std::max(u, v)].emplace_back(u, v);

    std::uint32_t n = g.node_count();
    std::vector<std::uint32_t> map(static_cast<std::size_t>(r));
    std::vector<std::uint8_t> used(n, 0);
    std::uint64_t injective = 0;

    auto rec = [&](auto&& self, int i) -> void {
        if (i == r) {
            ++injective;
            return;
        }
        for (std::uint32_t cand = 0; cand < n; ++cand) {
            if (used[cand]) continue;
            bool ok = true;
            for (auto [u, v] : checks[static_cast<std::size_t>(i)]) {
                int other = (u == i) ? v : u;
                if (!g.has_edge(cand, map[static_cast<std::size_t>(other)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[cand] = 1;
            map[static_cast<std::size_t>(i)] = cand;
            self(self, i + 1);
            used[cand] = 0;
        }
    };
    rec(rec, 0);

    std::uint64_t aut = pattern.automorphisms();
    if (injective % aut != 0)
        throw std::logic_error("brute-force map count not divisible by |Aut(R)|");
    return {pattern, injective / aut, ms_since(t0)};
}

CountResult count_pattern(const Graph& g, const SubgraphPattern& pattern) {
    switch (pattern.kind()) {
        case PatternKind::clique:
            return count_cliques(g, pattern.node_count());
        case PatternKind::cycle:
            if (pattern.node_count() <= 8) return count_cycles(g, pattern.node_count());
            return count_pattern_bruteforce(g, pattern);
        case PatternKind::custom:
            return count_pattern_bruteforce(g, pattern);
    }
    throw std::logic_error("unreachable pattern kind");
}

}  // namespace ogl
