// Acceptance suite: one check per release criterion, one pass/fail line each.
// Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "chromapath/circuits.hpp"
#include "chromapath/coloring.hpp"
#include "chromapath/harness.hpp"
#include "chromapath/outforest.hpp"
#include "chromapath/pathfind.hpp"

using namespace chromapath;

namespace {

struct Criterion {
    int id;
    std::string name;
    long budget_ms;
    std::function<std::string()> run; // empty string = pass, otherwise detail
};

constexpr std::uint64_t kSeed = 20260808;

std::string criterion_grunbaum() {
    VerificationReport r = verify_grunbaum();
    if (!r.pass())
        return "campaign reported " + std::to_string(r.failures.size()) + " failures";
    if (r.classes != 12)
        return "expected 12 isomorphism classes of 5-tournaments, got " +
               std::to_string(r.classes);
    if (r.counters.at("p4_free_classes") != 1)
        return "expected exactly one class without the antidirected length-4 path";
    return "";
}

std::string criterion_elsahili() {
    Digraph d = build_elsahili_example();
    if (find_p4(d))
        return "the extension contains the antidirected length-4 path";
    if (int chi = chromatic_number(d).chi; chi != 5)
        return "chi = " + std::to_string(chi) + ", expected 5";
    int low = 0;
    for (int v = 0; v < d.order(); ++v)
        if (d.out_degree(v) < 2)
            ++low;
    if (low != 1)
        return std::to_string(low) + " vertices with out-degree below 2, expected exactly 1";
    return "";
}

std::string criterion_gallai_roy() {
    long violations = 0;
    for (int n = 1; n <= 5; ++n)
        for_each_oriented_graph(n, [&](const Digraph& d) {
            if (static_cast<int>(gallai_roy_path(d).vertices.size()) < chromatic_number(d).chi)
                ++violations;
        });
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 500; ++i) {
        Digraph d = random_oriented_digraph(rand_int(rng, 6, 12), rand_unit(rng), rng);
        PathEmbedding p = gallai_roy_path(d);
        if (!check_embedding(d, p) ||
            static_cast<int>(p.vertices.size()) < chromatic_number(d).chi)
            ++violations;
    }
    return violations == 0 ? "" : std::to_string(violations) + " violations";
}

std::string criterion_cor32() {
    VerificationReport r = cor32_campaign(kSeed, 2);
    if (!r.pass())
        return std::to_string(r.failures.size()) + " failed extractions";
    if (r.counters.at("qualifying_runs") == 0)
        return "no sample qualified; the corpus is broken";
    return "";
}

std::string criterion_thm36() {
    VerificationReport r = thm36_campaign(kSeed, 2);
    if (!r.pass())
        return std::to_string(r.failures.size()) + " failures (first: " +
               r.failures.front().detail + ")";
    if (r.counters.at("certified_runs") == 0)
        return "no certified runs executed; the corpus is broken";
    return "";
}

std::string criterion_lemma34() {
    std::mt19937_64 rng(kSeed);
    long runs = 0;
    for (int i = 0; i < 200; ++i) {
        Digraph d = random_strongly_connected(rand_int(rng, 3, 8), 0.5, rng);
        int chi = chromatic_number(d).chi;
        for (int k = 3; k <= chi; ++k) {
            ++runs;
            try {
                Circuit c = k_good_circuit(d, k);
                if (c.length() < k)
                    return "circuit shorter than k";
                if (chromatic_number(induced(d, c.vertices).graph).chi > k)
                    return "induced chromatic number above k";
            } catch (const std::exception& e) {
                return std::string("raised: ") + e.what();
            }
        }
    }
    return runs > 0 ? "" : "no qualifying run";
}

std::string criterion_bondy() {
    VerificationReport r = bondy_campaign(kSeed, 2);
    return r.pass() ? "" : std::to_string(r.failures.size()) + " instances below chi";
}

std::string criterion_handles() {
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 100; ++i) {
        Digraph d = random_strongly_connected(rand_int(rng, 3, 9), 0.45, rng);
        HandleDecomposition h = handle_decomposition(d);
        if (h.handle_count() != d.arc_count() - d.order() + 1)
            return "handle count differs from m - n + 1";
        std::vector<char> covered(d.order(), 0);
        for (int v : h.base.vertices)
            covered[v] = 1;
        if (!is_circuit(d, h.base))
            return "base is not a circuit";
        for (const auto& handle : h.handles) {
            if (handle.size() < 2 || !covered[handle.front()] || !covered[handle.back()])
                return "handle does not meet the earlier union at its ends";
            for (std::size_t t = 1; t + 1 < handle.size(); ++t) {
                if (covered[handle[t]])
                    return "handle interior vertex is not new";
                covered[handle[t]] = 1;
            }
            for (std::size_t t = 0; t + 1 < handle.size(); ++t)
                if (!d.has_arc(handle[t], handle[t + 1]))
                    return "handle uses a missing arc";
        }
        for (int v = 0; v < d.order(); ++v)
            if (!covered[v])
                return "vertex left uncovered";
    }
    return "";
}

std::string criterion_oracle_agreement() {
    // same corpus as the thm36 campaign; assert the brute-force oracle finds
    // an embedding whenever it must
    std::vector<Digraph> instances;
    for (int n = 4; n <= 7; ++n)
        for (Digraph& t : enumerate_tournaments(n))
            instances.push_back(std::move(t));
    std::mt19937_64 rng(kSeed);
    const double probs[3] = {0.3, 0.5, 0.8};
    for (int i = 0; i < 1000; ++i)
        instances.push_back(random_oriented_digraph(rand_int(rng, 4, 10), probs[i % 3], rng));

    for (const Digraph& d : instances) {
        int chi = chromatic_number(d).chi;
        if (chi < 4)
            continue;
        for (int k = 1; k <= chi - 2; ++k) {
            int l = chi - 1 - k;
            CertifiedOutcome out = find_two_block_certified(d, k, l);
            bool oracle = find_pattern(d, BlockPattern::two_block(k, l)).has_value();
            if (!out.is_embedding() || !oracle)
                return "disagreement at k=" + std::to_string(k) + ", l=" + std::to_string(l);
        }
    }
    return "";
}

std::string criterion_scans() {
    VerificationReport a = scan_conjecture_219(8, kSeed, 2);
    VerificationReport b = scan_conjecture_38(8, kSeed, 2);
    for (const VerificationReport* r : {&a, &b}) {
        nlohmann::json j = nlohmann::json::parse(r->to_json());
        for (const char* key : {"campaign", "scope", "failures", "elapsed_ms"})
            if (!j.contains(key))
                return r->campaign + " report misses the \"" + key + "\" field";
        for (const char* key : {"orders", "classes", "samples", "seed"})
            if (!j["scope"].contains(key))
                return r->campaign + " scope misses the \"" + key + "\" field";
        if (!r->pass())
            return r->campaign + " found a counterexample: " + r->failures.front().detail;
    }
    return "";
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "Grunbaum: unique 5-tournament class without the antidirected path", 5000,
         criterion_grunbaum},
        {2, "out-degree-1 extension: p4-free, chi 5, one low-out-degree vertex", 1000,
         criterion_elsahili},
        {3, "Gallai-Roy path order reaches chi (exhaustive <= 5, 500 samples 6-12)", 60000,
         criterion_gallai_roy},
        {4, "two-block extraction from improper colorings (k,l in {1,2}, 300 samples)", 60000,
         criterion_cor32},
        {5, "certified two-block search is complete at chi = k+l+1 >= 4", 600000,
         criterion_thm36},
        {6, "k-good circuits on 200 strongly connected samples, k in 3..chi", 300000,
         criterion_lemma34},
        {7, "longest circuit >= chi on strong tournaments <= 7 and 200 samples <= 9", 300000,
         criterion_bondy},
        {8, "handle decompositions: r = m-n+1 and endpoint condition, 100 samples", 30000,
         criterion_handles},
        {9, "certifier and brute-force oracle agree on the criterion-5 corpus", 600000,
         criterion_oracle_agreement},
        {10, "conjecture scans complete with schema-valid reports and no counterexamples",
         600000, criterion_scans},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        bool ok = detail.empty() && ms <= c.budget_ms;
        if (detail.empty() && ms > c.budget_ms)
            detail = "exceeded " + std::to_string(c.budget_ms) + " ms budget";
        std::printf("[%s] criterion %2d: %s (%ld ms)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), ms, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
    if (failures > 0)
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
