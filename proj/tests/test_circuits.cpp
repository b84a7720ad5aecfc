#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "chromapath/circuits.hpp"
#include "chromapath/harness.hpp"

using namespace chromapath;

namespace {

// Independent circuit enumeration: all directed simple cycles, collected as
// normalized vertex lists.
std::set<std::vector<int>> all_circuits(const Digraph& d) {
    std::set<std::vector<int>> out;
    int n = d.order();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::function<void(int, int)> dfs = [&](int start, int v) {
        for (int w : d.out_neighbors(v)) {
            if (w == start && static_cast<int>(path.size()) >= (d.oriented() ? 3 : 2)) {
                out.insert(path);
                continue;
            }
            if (w <= start || used[w])
                continue;
            used[w] = 1;
            path.push_back(w);
            dfs(start, w);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        used.assign(n, 0);
        used[s] = 1;
        path.assign(1, s);
        dfs(s, s);
    }
    return out;
}

void validate_handles(const Digraph& d, const HandleDecomposition& h) {
    REQUIRE(is_circuit(d, h.base));
    std::set<int> covered(h.base.vertices.begin(), h.base.vertices.end());
    std::set<Arc> used;
    for (int i = 0; i < h.base.length(); ++i)
        used.insert({h.base.vertices[i], h.base.vertices[(i + 1) % h.base.length()]});
    for (const auto& handle : h.handles) {
        REQUIRE(handle.size() >= 2);
        CHECK(covered.count(handle.front()) == 1);
        CHECK(covered.count(handle.back()) == 1);
        for (std::size_t i = 0; i + 1 < handle.size(); ++i) {
            CHECK(d.has_arc(handle[i], handle[i + 1]));
            CHECK(used.insert({handle[i], handle[i + 1]}).second); // arcs partitioned
        }
        for (std::size_t i = 1; i + 1 < handle.size(); ++i) {
            CHECK(covered.count(handle[i]) == 0); // interior vertices are new
            covered.insert(handle[i]);
        }
    }
    CHECK(static_cast<int>(covered.size()) == d.order());
    CHECK(static_cast<int>(used.size()) == d.arc_count());
    CHECK(h.handle_count() == d.arc_count() - d.order() + 1);
}

} // namespace

TEST_CASE("strong components") {
    CHECK(strong_components(directed_cycle(4)).size() == 1);
    CHECK(strong_components(directed_path(3)).size() == 3);
    CHECK(strong_components(transitive_tournament(5)).size() == 5);
    CHECK(is_strongly_connected(build_t5()));
}

TEST_CASE("shortest circuit of bounded length") {
    Digraph c5 = directed_cycle(5);
    auto c = shortest_circuit_at_least(c5, 3);
    REQUIRE(c.has_value());
    CHECK(c->length() == 5);
    CHECK(is_circuit(c5, *c));

    CHECK_FALSE(shortest_circuit_at_least(c5, 6).has_value());

    // disjoint circuits of length 3 and 7
    Digraph two(10);
    for (int i = 0; i < 3; ++i)
        two.add_arc(i, (i + 1) % 3);
    for (int i = 0; i < 7; ++i)
        two.add_arc(3 + i, 3 + (i + 1) % 7);
    auto c7 = shortest_circuit_at_least(two, 4);
    REQUIRE(c7.has_value());
    CHECK(c7->length() == 7);

    CHECK_THROWS_AS(shortest_circuit_at_least(c5, 1), precondition_error);
}

TEST_CASE("shortest circuit length is minimal against enumeration") {
    std::mt19937_64 rng(307);
    for (int trial = 0; trial < 25; ++trial) {
        Digraph d = random_oriented_digraph(rand_int(rng, 3, 8), 0.5, rng);
        auto circuits = all_circuits(d);
        for (int k = 2; k <= d.order(); ++k) {
            int expected = 0;
            for (const auto& cyc : circuits) {
                int len = static_cast<int>(cyc.size());
                if (len >= k && (expected == 0 || len < expected))
                    expected = len;
            }
            auto got = shortest_circuit_at_least(d, k);
            if (expected == 0) {
                CHECK_FALSE(got.has_value());
            } else {
                REQUIRE(got.has_value());
                CHECK(got->length() == expected);
                CHECK(is_circuit(d, *got));
            }
        }
    }
}

TEST_CASE("k-good circuits") {
    Digraph c5 = directed_cycle(5);
    Circuit c = k_good_circuit(c5, 3);
    CHECK(c.length() >= 3);
    CHECK(chromatic_number(induced(c5, c.vertices).graph).chi <= 3);

    Digraph t5 = build_t5();
    Circuit tc = k_good_circuit(t5, 3);
    CHECK(tc.length() >= 3);
    CHECK(chromatic_number(induced(t5, tc.vertices).graph).chi <= 3);

    CHECK_THROWS_AS(k_good_circuit(directed_path(4), 3), precondition_error);
    CHECK_THROWS_AS(k_good_circuit(c5, 2), precondition_error);
    CHECK_THROWS_AS(k_good_circuit(c5, 4), precondition_error); // chi(C5) = 3
}

TEST_CASE("k-good circuit at k = chi exists via the longest circuit") {
    std::mt19937_64 rng(311);
    int done = 0;
    while (done < 15) {
        Digraph d = random_strongly_connected(rand_int(rng, 4, 8), 0.5, rng);
        int chi = chromatic_number(d).chi;
        if (chi < 3)
            continue;
        ++done;
        Circuit c = k_good_circuit(d, chi);
        CHECK(c.length() >= chi);
        CHECK(chromatic_number(induced(d, c.vertices).graph).chi <= chi);
    }
}

TEST_CASE("handle decomposition fixtures") {
    HandleDecomposition h3 = handle_decomposition(directed_cycle(3));
    CHECK(h3.handle_count() == 1);
    CHECK(h3.trivial_count == 0);
    validate_handles(directed_cycle(3), h3);

    Digraph c4_chord = directed_cycle(4);
    c4_chord.add_arc(0, 2);
    HandleDecomposition h2 = handle_decomposition(c4_chord);
    CHECK(h2.handle_count() == 2);
    validate_handles(c4_chord, h2);

    HandleDecomposition ht5 = handle_decomposition(build_t5());
    CHECK(ht5.handle_count() == 6);
    validate_handles(build_t5(), ht5);

    CHECK_THROWS_AS(handle_decomposition(directed_path(3)), precondition_error);
}

TEST_CASE("handle decomposition on random strongly connected digraphs") {
    std::mt19937_64 rng(313);
    for (int trial = 0; trial < 20; ++trial) {
        Digraph d = random_strongly_connected(rand_int(rng, 3, 9), 0.4, rng);
        validate_handles(d, handle_decomposition(d));
    }
}

TEST_CASE("circuit contraction") {
    // C5 plus an outside vertex u with u -> 0 and 2 -> u
    Digraph d(6);
    for (int i = 0; i < 5; ++i)
        d.add_arc(i, (i + 1) % 5);
    d.add_arc(5, 0);
    d.add_arc(2, 5);
    Circuit c5{{0, 1, 2, 3, 4}};
    ContractResult r = contract_circuit(d, c5);
    CHECK(r.graph.order() == 2);
    CHECK(r.graph.has_arc(0, 1));
    CHECK(r.graph.has_arc(1, 0)); // digon survives in multigraph mode
    CHECK_FALSE(r.graph.oriented());

    ContractResult self = contract_circuit(directed_cycle(4), Circuit{{0, 1, 2, 3}});
    CHECK(self.graph.order() == 1);
    CHECK(self.graph.arc_count() == 0);

    CHECK_THROWS_AS(contract_circuit(directed_cycle(4), Circuit{{0, 2}}), precondition_error);
}

TEST_CASE("contracting a circuit preserves strong connectivity") {
    std::mt19937_64 rng(317);
    for (int trial = 0; trial < 15; ++trial) {
        Digraph d = random_strongly_connected(rand_int(rng, 4, 8), 0.5, rng);
        auto c = shortest_circuit_at_least(d, 3);
        REQUIRE(c.has_value());
        ContractResult r = contract_circuit(d, *c);
        CHECK(is_strongly_connected(r.graph));
    }
}

TEST_CASE("bondy verification fixtures") {
    BondyReport c3 = verify_bondy(directed_cycle(3));
    CHECK(c3.chi == 3);
    CHECK(c3.longest_circuit == 3);
    CHECK(c3.pass);

    BondyReport t5 = verify_bondy(build_t5());
    CHECK(t5.chi == 5);
    CHECK(t5.longest_circuit == 5);
    CHECK(t5.pass);

    BondyReport c5 = verify_bondy(directed_cycle(5));
    CHECK(c5.chi == 3);
    CHECK(c5.longest_circuit == 5);
    CHECK(c5.pass);

    CHECK_THROWS_AS(verify_bondy(directed_path(4)), precondition_error);
}

TEST_CASE("contracting a good circuit keeps the residue colorful") {
    // for strongly connected d with chi = n >= 4, k+l = n-1, l >= 2:
    // contracting an (l+1)-good circuit leaves chi >= k+1
    std::mt19937_64 rng(331);
    int done = 0;
    while (done < 10) {
        Digraph d = random_strongly_connected(rand_int(rng, 4, 8), 0.7, rng);
        int n = chromatic_number(d).chi;
        if (n < 4)
            continue;
        ++done;
        for (int l = (n - 1 + 1) / 2; l <= n - 2; ++l) {
            int k = n - 1 - l;
            if (l < 2 || k < 1)
                continue;
            Circuit c = k_good_circuit(d, l + 1);
            ContractResult r = contract_circuit(d, c);
            CHECK(chromatic_number(r.graph).chi >= k + 1);
        }
    }
}
