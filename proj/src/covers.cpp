#include "ogl/covers.hpp"

#include <array>
#include <bit>
#include <sstream>

#include "ogl/errors.hpp"

namespace ogl {

namespace {

constexpr int kMaxEdges = 10;  // K_5 for lemma 6

// Bitmask workspace over an indexed edge list: norm(mask) = ||subset||.
struct EdgeSpace {
    int s = 0;
    std::array<std::uint16_t, kMaxEdges> node_mask{};  // per edge

    static EdgeSpace from_pattern_edges(
        const std::vector<std::pair<std::uint8_t, std::uint8_t>>& edges) {
        if (edges.size() > kMaxEdges) throw guard_error("edge set too large");
        EdgeSpace sp;
        sp.s = static_cast<int>(edges.size());
        for (int i = 0; i < sp.s; ++i)
            sp.node_mask[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(
                (1u << edges[static_cast<std::size_t>(i)].first) |
                (1u << edges[static_cast<std::size_t>(i)].second));
        return sp;
    }

    std::uint16_t nodes_of(std::uint32_t subset) const {
        std::uint16_t acc = 0;
        while (subset) {
            int i = std::countr_zero(subset);
            acc |= node_mask[static_cast<std::size_t>(i)];
            subset &= subset - 1;
        }
        return acc;
    }

    int norm(std::uint32_t subset) const { return std::popcount(nodes_of(subset)); }
};

std::string describe_blocks(const std::vector<std::uint32_t>& blocks) {
    std::ostringstream out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) out << ' ';
        out << '{';
        bool first = true;
        for (int i = 0; i < 32; ++i)
            if (blocks[b] & (1u << i)) {
                if (!first) out << ',';
                out << 'e' << i;
                first = false;
            }
        out << '}';
    }
    return out.str();
}

}  // namespace

void for_each_set_partition(int k, const std::function<void(const int*, int)>& fn) {
    if (k < 0) throw guard_error("for_each_set_partition: negative size");
    if (k == 0) {
        fn(nullptr, 0);
        return;
    }
    // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
    std::array<int, 16> a{}, mx{};
    if (k > 16) throw guard_error("for_each_set_partition: size > 16");
    int i = 0;
    a[0] = 0;
    mx[0] = 0;
    while (true) {
        if (i == k - 1) {
            fn(a.data(), mx[static_cast<std::size_t>(i)] + 1);
            while (i > 0 && a[static_cast<std::size_t>(i)] ==
                                mx[static_cast<std::size_t>(i - 1)] + 1)
                --i;
            if (i == 0) return;
            ++a[static_cast<std::size_t>(i)];
            mx[static_cast<std::size_t>(i)] =
                std::max(mx[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)]);
        } else {
            ++i;
            a[static_cast<std::size_t>(i)] = 0;
            mx[static_cast<std::size_t>(i)] = mx[static_cast<std::size_t>(i - 1)];
        }
    }
}

namespace {

EdgeCover cover_from_blocks(const std::vector<EdgeSet::Edge>& edges,
                            const std::vector<std::uint32_t>& block_masks,
                            bool is_partition) {
    EdgeCover cover;
    cover.is_partition = is_partition;
    for (std::uint32_t bm : block_masks) {
        EdgeSet block;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (bm & (1u << i)) block.insert(edges[i].first, edges[i].second);
        cover.blocks.push_back(std::move(block));
    }
    // node-overlap predicate
    std::vector<std::uint64_t> vmask(block_masks.size(), 0);
    for (std::size_t b = 0; b < block_masks.size(); ++b)
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (block_masks[b] & (1u << i))
                vmask[b] |= (1ull << (edges[i].first % 64)) | (1ull << (edges[i].second % 64));
    for (std::size_t b1 = 0; b1 < vmask.size() && !cover.has_overlapping_pair; ++b1)
        for (std::size_t b2 = b1 + 1; b2 < vmask.size(); ++b2)
            if (std::popcount(vmask[b1] & vmask[b2]) >= 2) {
                cover.has_overlapping_pair = true;
                break;
            }
    return cover;
}

}  // namespace

void enumerate_partitions(const EdgeSet& edges,
                          const std::function<void(const EdgeCover&)>& fn) {
    if (edges.size() > 8)
        throw guard_error("enumerate_partitions: more than 8 edges");
    const auto& list = edges.edges();
    int s = static_cast<int>(list.size());
    for_each_set_partition(s, [&](const int* rgs, int t) {
        std::vector<std::uint32_t> block_masks(static_cast<std::size_t>(t), 0);
        for (int i = 0; i < s; ++i)
            block_masks[static_cast<std::size_t>(rgs[i])] |= (1u << i);
        fn(cover_from_blocks(list, block_masks, true));
    });
}

std::vector<EdgeCover> enumerate_partitions(const EdgeSet& edges) {
    std::vector<EdgeCover> out;
    enumerate_partitions(edges, [&](const EdgeCover& c) { out.push_back(c); });
    return out;
}

LemmaReport check_lemma1(const SubgraphPattern& pattern) {
    if (!pattern.connected()) throw guard_error("check_lemma1: pattern must be connected");
    int s = pattern.edge_count();
    int rv = pattern.node_count();
    if (s < 1 || s > 6) throw guard_error("check_lemma1: needs 1 <= s <= 6");
    EdgeSpace sp = EdgeSpace::from_pattern_edges(pattern.edges());

    // profile tables over all subsets
    std::uint32_t full = (s == 32) ? ~0u : ((1u << s) - 1);
    std::vector<int> norm_tab(full + 1), pop_tab(full + 1);
    std::vector<std::uint16_t> nodes_tab(full + 1);
    for (std::uint32_t m = 0; m <= full; ++m) {
        nodes_tab[m] = sp.nodes_of(m);
        norm_tab[m] = std::popcount(nodes_tab[m]);
        pop_tab[m] = std::popcount(m);
    }

    LemmaReport rep;
    rep.lemma = 1;
    std::vector<std::uint32_t> blocks;

    auto visit = [&](const std::vector<std::uint32_t>& bl) {
        std::uint32_t uni = 0;
        for (std::uint32_t b : bl) uni |= b;
        if (uni != full) return;
        ++rep.cases_checked;

        int sum_norm_m1 = 0, sum_edges = 0;
        for (std::uint32_t b : bl) {
            sum_norm_m1 += norm_tab[b] - 1;
            sum_edges += pop_tab[b];
        }
        bool node_overlap = false, edge_overlap = false;
        for (std::size_t i = 0; i < bl.size(); ++i)
            for (std::size_t j = i + 1; j < bl.size(); ++j) {
                if (std::popcount(static_cast<std::uint32_t>(nodes_tab[bl[i]] &
                                                             nodes_tab[bl[j]])) >= 2)
                    node_overlap = true;
                if (bl[i] & bl[j]) edge_overlap = true;
            }

        bool bad = sum_norm_m1 < rv - 1 || (node_overlap && sum_norm_m1 < rv) ||
                   (edge_overlap && sum_edges < s + 1);
        if (bad) {
            ++rep.violations;
            if (rep.detail.empty())
                rep.detail = "cover " + describe_blocks(bl) + " violates lemma 1 on " +
                             pattern.name();
        }
        if (sum_norm_m1 == rv - 1) ++rep.firstcover_equality_cases;
    };

    // all collections of 1..4 distinct nonempty subsets
    auto rec = [&](auto&& self, std::uint32_t min_mask, std::uint32_t uni) -> void {
        if (blocks.size() == 4) return;
        for (std::uint32_t m = min_mask; m <= full; ++m) {
            blocks.push_back(m);
            if ((uni | m) == full) visit(blocks);
            self(self, m + 1, uni | m);
            blocks.pop_back();
        }
    };
    rec(rec, 1, 0);
    return rep;
}

LemmaReport check_lemma2(const SubgraphPattern& r1, const SubgraphPattern& r2) {
    if (!r1.connected() || !r2.connected())
        throw guard_error("check_lemma2: patterns must be connected");
    int s1 = r1.edge_count(), s2 = r2.edge_count();
    if (s1 + s2 > 6) throw guard_error("check_lemma2: combined edge count > 6");
    if (s1 < 1 || s2 < 1) throw guard_error("check_lemma2: patterns need edges");
    int rv1 = r1.node_count(), rv2 = r2.node_count();

    // relabel r2 onto nodes rv1..rv1+rv2-1
    std::vector<std::pair<std::uint8_t, std::uint8_t>> edges = r1.edges();
    for (auto [u, v] : r2.edges())
        edges.emplace_back(static_cast<std::uint8_t>(u + rv1),
                           static_cast<std::uint8_t>(v + rv1));
    if (rv1 + rv2 > 16) throw guard_error("check_lemma2: too many nodes");
    EdgeSpace sp = EdgeSpace::from_pattern_edges(edges);

    int s = s1 + s2;
    std::uint32_t side1 = (1u << s1) - 1;  // edge indices below s1 belong to R1

    LemmaReport rep;
    rep.lemma = 2;
    for_each_set_partition(s, [&](const int* rgs, int t) {
        std::vector<std::uint32_t> bm(static_cast<std::size_t>(t), 0);
        for (int i = 0; i < s; ++i) bm[static_cast<std::size_t>(rgs[i])] |= (1u << i);
        ++rep.cases_checked;
        int sum_norm_m1 = 0, straddling = 0;
        for (std::uint32_t b : bm) {
            sum_norm_m1 += sp.norm(b) - 1;
            if ((b & side1) && (b & ~side1)) ++straddling;
        }
        if (sum_norm_m1 < rv1 + rv2 - 2 + straddling) {
            ++rep.violations;
            if (rep.detail.empty())
                rep.detail = "partition " + describe_blocks(bm) + " violates lemma 2 on " +
                             r1.name() + " + " + r2.name();
        }
    });
    return rep;
}

LemmaReport check_lemma6(int r) {
    if (r < 3 || r > 5) throw guard_error("check_lemma6: r outside [3,5]");
    SubgraphPattern kr = SubgraphPattern::clique(r);
    EdgeSpace sp = EdgeSpace::from_pattern_edges(kr.edges());
    int s = kr.edge_count();
    std::uint32_t full = (1u << s) - 1;

    LemmaReport rep;
    rep.lemma = 6;
    for (std::uint32_t m = 1; m < full; ++m) {
        std::uint32_t c = full ^ m;
        if (m > c) continue;  // unordered pairs once
        ++rep.cases_checked;
        if (sp.norm(m) != r && sp.norm(c) != r) {
            ++rep.violations;
            if (rep.detail.empty())
                rep.detail = "2-block partition " + describe_blocks({m, c}) +
                             " of K_" + std::to_string(r) + " violates lemma 6";
        }
    }
    return rep;
}

}  // namespace ogl
