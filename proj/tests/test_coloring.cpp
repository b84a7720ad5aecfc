#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chromapath/coloring.hpp"
#include "chromapath/harness.hpp"

using namespace chromapath;

namespace {

// Brute-force chromatic number: smallest k admitting any proper assignment,
// enumerated directly. Independent of the solver's bounds and ordering.
bool brute_colorable(const Digraph& d, int k, std::vector<int>& colors, int v) {
    if (v == d.order())
        return true;
    for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (colors[u] == c && d.adjacent(u, v))
                ok = false;
        if (!ok)
            continue;
        colors[v] = c;
        if (brute_colorable(d, k, colors, v + 1))
            return true;
        colors[v] = 0;
    }
    return false;
}

int brute_chromatic(const Digraph& d) {
    for (int k = 1; k <= d.order(); ++k) {
        std::vector<int> colors(d.order(), 0);
        if (brute_colorable(d, k, colors, 0))
            return k;
    }
    return d.order();
}

} // namespace

TEST_CASE("is_proper") {
    Digraph c3 = directed_cycle(3);
    CHECK(is_proper(c3, {{1, 2, 3}, 3}));
    CHECK_FALSE(is_proper(c3, {{1, 1, 1}, 1}));

    Digraph t5 = build_t5();
    VertexColoring shared{{1, 2, 3, 4, 1}, 4};
    CHECK_FALSE(is_proper(t5, shared)); // vertices 0 and 4 are adjacent

    CHECK_THROWS_AS(is_proper(c3, {{1, 2}, 2}), precondition_error);
    CHECK_THROWS_AS(is_proper(c3, {{1, 2, 5}, 3}), precondition_error);
}

TEST_CASE("chromatic number on fixtures") {
    auto check = [](const Digraph& d, int expected) {
        ChromaticResult r = chromatic_number(d);
        CHECK(r.chi == expected);
        CHECK(r.witness.k == expected);
        CHECK(is_proper(d, r.witness));
    };
    check(directed_cycle(5), 3);
    check(build_t5(), 5);
    check(Digraph(7), 1);
    check(transitive_tournament(6), 6);
    check(directed_cycle(6), 2);
}

TEST_CASE("chromatic number agrees with brute force") {
    for_each_oriented_graph(4, [](const Digraph& d) {
        CHECK(chromatic_number(d).chi == brute_chromatic(d));
    });
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        Digraph d = random_oriented_digraph(rand_int(rng, 1, 7), rand_unit(rng), rng);
        ChromaticResult r = chromatic_number(d);
        CHECK(r.chi == brute_chromatic(d));
        CHECK(is_proper(d, r.witness));
    }
}

TEST_CASE("max clique") {
    CHECK(max_clique_size(build_t5()) == 5);
    CHECK(max_clique_size(directed_cycle(5)) == 2);
    CHECK(max_clique_size(Digraph(3)) == 1);
}

TEST_CASE("k-critical subdigraph on fixtures") {
    Digraph c5 = directed_cycle(5);
    CriticalResult r = k_critical_subdigraph(c5, 3);
    CHECK(r.graph.order() == 5); // odd cycles are 3-critical

    Digraph t5 = build_t5();
    CriticalResult r4 = k_critical_subdigraph(t5, 4);
    CHECK(r4.graph.order() == 4);
    CHECK(is_tournament(r4.graph));

    // isolated vertex is dropped
    Digraph c5_plus(6);
    for (auto [u, v] : c5.arcs())
        c5_plus.add_arc(u, v);
    CriticalResult r5 = k_critical_subdigraph(c5_plus, 3);
    CHECK(r5.graph.order() == 5);

    CHECK_THROWS_AS(k_critical_subdigraph(directed_cycle(6), 3), precondition_error);
}

TEST_CASE("k-critical postcondition holds on random inputs") {
    std::mt19937_64 rng(103);
    int done = 0;
    while (done < 15) {
        Digraph d = random_oriented_digraph(rand_int(rng, 4, 8), 0.7, rng);
        int chi = chromatic_number(d).chi;
        if (chi < 3)
            continue;
        ++done;
        int k = chi; // any k <= chi works; use the top
        CriticalResult r = k_critical_subdigraph(d, k);
        CHECK(chromatic_number(r.graph).chi == k);
        for (int v = 0; v < r.graph.order(); ++v) {
            std::vector<int> rest;
            for (int w = 0; w < r.graph.order(); ++w)
                if (w != v)
                    rest.push_back(w);
            if (rest.empty())
                continue;
            CHECK(chromatic_number(induced(r.graph, rest).graph).chi == k - 1);
        }
        // the vertex map points back at the host
        for (int v = 0; v < r.graph.order(); ++v)
            CHECK(r.to_host[v] < d.order());
    }
}

TEST_CASE("no 5-tournament and in-degree at most 2 forces chi at most 4") {
    for_each_oriented_graph(4, [](const Digraph& d) {
        if (d.max_in_degree() <= 2)
            CHECK(chromatic_number(d).chi <= 4);
    });
    std::mt19937_64 rng(107);
    int done = 0;
    while (done < 80) {
        int n = rand_int(rng, 5, 8);
        Digraph d(n);
        // random arcs with every in-degree capped at 2
        for (int i = 0; i < 3 * n; ++i) {
            int u = rand_int(rng, 0, n - 1), v = rand_int(rng, 0, n - 1);
            if (u == v || d.adjacent(u, v) || d.in_degree(v) >= 2)
                continue;
            d.add_arc(u, v);
        }
        if (max_clique_size(d) >= 5)
            continue;
        ++done;
        CHECK(chromatic_number(d).chi <= 4);
    }
}
