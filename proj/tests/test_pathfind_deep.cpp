#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// Fixtures that drive the certified two-block search through its rarer
// extraction cases: each digraph is built so the canonical-coloring loop
// removes a circuit first and the embedding is only reachable through the
// later checks (bad vertices, descendant sets, hooks).

#include "chromapath/coloring.hpp"
#include "chromapath/harness.hpp"
#include "chromapath/pathfind.hpp"

using namespace chromapath;

namespace {

Digraph from_arcs(int n, const std::vector<Arc>& arcs) {
    Digraph d(n);
    for (auto [u, v] : arcs)
        d.add_arc(u, v);
    return d;
}

void expect_embedding(const Digraph& d, int k, int l) {
    CertifiedOutcome out = find_two_block_certified(d, k, l);
    REQUIRE(out.is_embedding());
    CHECK(check_embedding(d, *out.embedding));
    CHECK(out.embedding->blocks == std::vector<Block>{{Dir::forward, k}, {Dir::backward, l}});
    CHECK(find_pattern(d, BlockPattern::two_block(k, l)).has_value());
}

} // namespace

TEST_CASE("certifier: arc from a removed circuit to a bad vertex's strict descendant") {
    // circuit 1->2->3->4->1 is removed; 5 is its level-2 out-neighbor with
    // descendant 6; the arc 7->6 enters that subtree from outside
    Digraph d = from_arcs(8, {{0, 1},
                              {0, 5},
                              {0, 7},
                              {1, 2},
                              {2, 3},
                              {2, 5},
                              {3, 4},
                              {4, 1},
                              {5, 6},
                              {7, 6}});
    expect_embedding(d, 2, 2);
}

TEST_CASE("certifier: arc leaving a bad vertex's descendant set") {
    // after removing the circuit, 5 and 6 form the descendant set; 6 points
    // at the deep vertex 12 of an untouched chain
    Digraph d = from_arcs(13, {{0, 1},
                               {0, 5},
                               {0, 7},
                               {1, 2},
                               {2, 3},
                               {2, 5},
                               {3, 4},
                               {4, 1},
                               {5, 6},
                               {6, 12},
                               {7, 8},
                               {8, 9},
                               {9, 10},
                               {10, 11},
                               {11, 12}});
    expect_embedding(d, 2, 2);
}

TEST_CASE("certifier: bad vertex fed by two removed circuits") {
    // two disjoint 4-circuits, both with an arc to vertex 5
    Digraph d = from_arcs(10, {{0, 1},
                               {0, 5},
                               {0, 6},
                               {1, 2},
                               {2, 3},
                               {2, 5},
                               {3, 4},
                               {4, 1},
                               {6, 7},
                               {7, 5},
                               {7, 8},
                               {8, 9},
                               {9, 6}});
    expect_embedding(d, 2, 2);
}

TEST_CASE("certifier: bad vertex with more in-neighbors than the second block") {
    // a 7-circuit sends three arcs into vertex 7; the in-neighbors sit at
    // levels 4, 6 and 7, so none of them collides with 7 under the
    // canonical coloring and the crowded case decides
    Digraph d = from_arcs(8, {{0, 1},
                              {1, 2},
                              {2, 3},
                              {3, 4},
                              {3, 7},
                              {4, 5},
                              {5, 6},
                              {5, 7},
                              {6, 0},
                              {6, 7}});
    expect_embedding(d, 1, 2);
}

TEST_CASE("certifier: violating arc lands below the first block boundary") {
    // back arc from level 6 to level 3 with k = 2: the low-landing case
    Digraph d = directed_path(6);
    d.add_arc(5, 2);
    expect_embedding(d, 2, 2);
}

TEST_CASE("certifier: crowded bad vertex with a hook chain") {
    // 7-circuit on levels 2..8 with three arcs into vertex 8, whose
    // in-neighbors sit at levels 5, 7 and 8; k = 2 exercises the hook-based
    // forward chain of the crowded case
    Digraph d = from_arcs(9, {{0, 1},
                              {0, 8},
                              {1, 2},
                              {2, 3},
                              {3, 4},
                              {4, 5},
                              {4, 8},
                              {5, 6},
                              {6, 7},
                              {6, 8},
                              {7, 1},
                              {7, 8}});
    expect_embedding(d, 2, 2);
}

TEST_CASE("certifier: coloring assembly around a bad vertex") {
    // the circuit is removed, vertex 5 stays bad with a single circuit
    // in-neighbor and a descendant; no extraction fires and the assembled
    // coloring must shift the descendant set
    Digraph d = from_arcs(7, {{0, 1}, {0, 5}, {1, 2}, {2, 3}, {2, 5}, {3, 4}, {4, 1}, {5, 6}});
    CertifiedOutcome out = find_two_block_certified(d, 2, 2);
    REQUIRE_FALSE(out.is_embedding());
    CHECK(out.coloring->k == 4);
    CHECK(is_proper(d, *out.coloring));
}
