#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ogl/edge_set.hpp"
#include "ogl/pattern.hpp"

namespace ogl {

// A collection of nonempty edge subsets of some E(R) with union E(R).
struct EdgeCover {
    std::vector<EdgeSet> blocks;
    bool is_partition = false;
    // some pair of blocks shares >= 2 incident nodes
    bool has_overlapping_pair = false;
};

// Visits every set partition of k items in restricted-growth-string order;
// fn receives the assignment array (item -> block) and the block count.
void for_each_set_partition(int k,
                            const std::function<void(const int*, int)>& fn);

// All Bell(|E|) partitions of the edge set, |E| <= 8.
std::vector<EdgeCover> enumerate_partitions(const EdgeSet& edges);
void enumerate_partitions(const EdgeSet& edges,
                          const std::function<void(const EdgeCover&)>& fn);

struct LemmaReport {
    int lemma = 0;
    std::uint64_t cases_checked = 0;
    std::uint64_t violations = 0;
    // covers attaining equality in sum(||E||-1) >= |V(R)|-1 (lemma 1 only;
    // disjoint singleton partitions of stars sit here)
    std::uint64_t firstcover_equality_cases = 0;
    std::string detail;  // first violation, empty when clean
};

// Exhaustively checks, over every cover of E(R) with at most 4 blocks:
//   sum(||E||-1) >= |V(R)|-1                      always
//   sum(||E||-1) >= |V(R)|      when two blocks share >= 2 incident nodes
//   sum(|E|)     >= |E(R)|+1    when two blocks share an edge
// Pattern must be connected with 1 <= s <= 6.
LemmaReport check_lemma1(const SubgraphPattern& pattern);

// For every partition of E(R1) u E(R2) (R2 relabeled node-disjoint):
//   sum(||E||-1) >= |V(R1)|+|V(R2)|-2+|E0|, E0 = blocks meeting both sides.
// Both patterns connected, combined s <= 6.
LemmaReport check_lemma2(const SubgraphPattern& r1, const SubgraphPattern& r2);

// For every 2-block partition of E(K_r), some block touches all r nodes.
// 3 <= r <= 5.
LemmaReport check_lemma6(int r);

}  // namespace ogl
