#include "chromapath/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include <json.hpp>

#include "chromapath/circuits.hpp"
#include "chromapath/coloring.hpp"
#include "chromapath/outforest.hpp"
#include "chromapath/pathfind.hpp"

namespace chromapath {

Digraph directed_path(int n) {
    Digraph d(n);
    for (int i = 0; i + 1 < n; ++i)
        d.add_arc(i, i + 1);
    return d;
}

Digraph directed_cycle(int n) {
    if (n < 3)
        throw precondition_error("directed_cycle: need at least 3 vertices");
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        d.add_arc(i, (i + 1) % n);
    return d;
}

Digraph transitive_tournament(int n) {
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            d.add_arc(i, j);
    return d;
}

Digraph build_t5() {
    Digraph d(5);
    for (int i = 0; i < 5; ++i) {
        d.add_arc(i, (i + 1) % 5);
        d.add_arc(i, (i + 2) % 5);
    }
    return d;
}

Digraph build_elsahili_example() {
    Digraph t5 = build_t5();
    Digraph d(6);
    for (auto [u, v] : t5.arcs())
        d.add_arc(u, v);
    d.add_arc(5, 0);
    return d;
}

namespace {

// Extend every (n-1)-class by a new vertex with every orientation pattern,
// dedupe by canonical form. new_vertex_last controls the labeling so the two
// generation orders differ for the soundness cross-check.
std::vector<Digraph> enumerate_tournaments_impl(int n, bool forward_masks) {
    if (n < 1)
        throw precondition_error("enumerate_tournaments: n must be positive");
    if (n > 7)
        throw precondition_error("enumerate_tournaments: capped at n = 7");
    std::vector<Digraph> classes{Digraph(1)};
    for (int m = 2; m <= n; ++m) {
        std::map<std::string, Digraph> next;
        for (const Digraph& t : classes) {
            int patterns = 1 << (m - 1);
            for (int step = 0; step < patterns; ++step) {
                int mask = forward_masks ? step : patterns - 1 - step;
                Digraph g(m);
                for (auto [u, v] : t.arcs())
                    g.add_arc(u, v);
                for (int i = 0; i < m - 1; ++i) {
                    if (mask & (1 << i))
                        g.add_arc(m - 1, i);
                    else
                        g.add_arc(i, m - 1);
                }
                next.emplace(canonical_form(g), std::move(g));
            }
        }
        classes.clear();
        for (auto& [key, g] : next)
            classes.push_back(std::move(g));
    }
    return classes;
}

} // namespace

std::vector<Digraph> enumerate_tournaments(int n) {
    return enumerate_tournaments_impl(n, true);
}

std::vector<Digraph> enumerate_tournaments_alt(int n) {
    return enumerate_tournaments_impl(n, false);
}

void for_each_oriented_graph(int n, const std::function<void(const Digraph&)>& fn) {
    if (n < 1)
        throw precondition_error("for_each_oriented_graph: n must be positive");
    if (n > 5)
        throw precondition_error("for_each_oriented_graph: capped at n = 5");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::vector<int> state(pairs.size(), 0); // 0 = none, 1 = u->v, 2 = v->u
    while (true) {
        Digraph d(n);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (state[i] == 1)
                d.add_arc(pairs[i].first, pairs[i].second);
            else if (state[i] == 2)
                d.add_arc(pairs[i].second, pairs[i].first);
        }
        fn(d);
        std::size_t i = 0;
        while (i < state.size() && state[i] == 2)
            state[i++] = 0;
        if (i == state.size())
            break;
        ++state[i];
    }
}

double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Digraph random_oriented_digraph(int n, double arc_prob, std::mt19937_64& rng) {
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rand_unit(rng) >= arc_prob)
                continue;
            if (rng() & 1)
                d.add_arc(u, v);
            else
                d.add_arc(v, u);
        }
    return d;
}

Digraph random_tournament(int n, std::mt19937_64& rng) {
    return random_oriented_digraph(n, 1.1, rng);
}

Digraph random_strongly_connected(int n, double arc_prob, std::mt19937_64& rng) {
    if (n < 3)
        throw precondition_error("random_strongly_connected: need at least 3 vertices");
    double p = arc_prob;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Digraph d = random_oriented_digraph(n, p, rng);
        if (is_strongly_connected(d))
            return d;
        if (attempt % 50 == 49)
            p = std::min(0.95, p + 0.1);
    }
    throw internal_inconsistency("random_strongly_connected: sampling failed to converge");
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["campaign"] = campaign;
    j["scope"]["orders"] = orders;
    j["scope"]["classes"] = classes;
    j["scope"]["samples"] = samples;
    j["scope"]["seed"] = seed;
    for (const auto& [key, value] : counters)
        j["scope"][key] = value;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : failures)
        j["failures"].push_back({{"arclist", f.arclist}, {"detail", f.detail}});
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2);
}

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// Workers pull indices from a shared counter and write into caller-owned
// slots, so the merged result is independent of the parallelism.
void run_indexed(long count, int jobs, const std::function<void(long)>& fn) {
    if (jobs <= 1) {
        for (long i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> workers;
    for (int j = 0; j < std::max(1, jobs); ++j)
        workers.emplace_back([&]() {
            long i;
            while ((i = next.fetch_add(1)) < count)
                fn(i);
        });
    for (auto& w : workers)
        w.join();
}

std::vector<BlockPattern> all_patterns_of_length(int len) {
    std::vector<BlockPattern> out;
    for (int mask = 0; mask < (1 << len); ++mask) {
        BlockPattern p;
        for (int i = 0; i < len; ++i) {
            Dir dir = (mask >> i) & 1 ? Dir::forward : Dir::backward;
            if (!p.blocks.empty() && p.blocks.back().dir == dir)
                ++p.blocks.back().len;
            else
                p.blocks.push_back({dir, 1});
        }
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

VerificationReport verify_grunbaum() {
    auto t0 = Clock::now();
    VerificationReport r;
    r.campaign = "grunbaum";
    r.orders = {5};

    std::vector<Digraph> classes = enumerate_tournaments(5);
    r.classes = static_cast<long>(classes.size());
    std::string t5_form = canonical_form(build_t5());
    long free_count = 0;
    for (const Digraph& t : classes) {
        if (find_p4(t))
            continue;
        ++free_count;
        if (canonical_form(t) != t5_form)
            r.failures.push_back({format_arclist(t),
                                  "tournament without the antidirected length-4 path is not the "
                                  "2-regular tournament"});
    }
    r.counters["p4_free_classes"] = free_count;
    if (free_count == 0)
        r.failures.push_back({format_arclist(build_t5()),
                              "expected exactly one class without the antidirected length-4 "
                              "path, found none"});
    if (free_count > 1)
        r.failures.push_back({format_arclist(build_t5()),
                              "expected exactly one class without the antidirected length-4 "
                              "path, found " + std::to_string(free_count)});
    r.elapsed_ms = ms_since(t0);
    return r;
}

VerificationReport bondy_campaign(std::uint64_t seed, int jobs) {
    auto t0 = Clock::now();
    VerificationReport r;
    r.campaign = "bondy";
    r.orders = {3, 4, 5, 6, 7, 8, 9};
    r.seed = seed;

    std::vector<Digraph> instances;
    for (int n = 3; n <= 7; ++n)
        for (Digraph& t : enumerate_tournaments(n))
            if (is_strongly_connected(t)) {
                instances.push_back(std::move(t));
                ++r.classes;
            }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 200; ++i) {
        int n = rand_int(rng, 3, 9);
        instances.push_back(random_strongly_connected(n, 0.5, rng));
        ++r.samples;
    }

    std::vector<std::string> fails(instances.size());
    run_indexed(static_cast<long>(instances.size()), jobs, [&](long i) {
        BondyReport b = verify_bondy(instances[i]);
        if (!b.pass)
            fails[i] = "longest circuit " + std::to_string(b.longest_circuit) +
                       " below chromatic number " + std::to_string(b.chi);
    });
    for (std::size_t i = 0; i < instances.size(); ++i)
        if (!fails[i].empty())
            r.failures.push_back({format_arclist(instances[i]), fails[i]});
    r.elapsed_ms = ms_since(t0);
    return r;
}

VerificationReport cor32_campaign(std::uint64_t seed, int jobs) {
    auto t0 = Clock::now();
    VerificationReport r;
    r.campaign = "cor32";
    r.orders = {4, 5, 6, 7, 8, 9, 10};
    r.seed = seed;

    std::mt19937_64 rng(seed);
    std::vector<Digraph> instances;
    for (int i = 0; i < 300; ++i) {
        switch (i % 3) {
        case 0:
            instances.push_back(random_oriented_digraph(rand_int(rng, 4, 10), 0.6, rng));
            break;
        case 1:
            instances.push_back(random_tournament(rand_int(rng, 5, 10), rng));
            break;
        default:
            instances.push_back(transitive_tournament(rand_int(rng, 6, 10)));
            break;
        }
    }
    r.samples = static_cast<long>(instances.size());

    std::vector<std::string> fails(instances.size());
    std::vector<long> runs(instances.size(), 0);
    run_indexed(static_cast<long>(instances.size()), jobs, [&](long i) {
        const Digraph& d = instances[i];
        int chi = chromatic_number(d).chi;
        for (int k = 1; k <= 2 && fails[i].empty(); ++k)
            for (int l = 1; l <= 2 && fails[i].empty(); ++l) {
                if (chi < k + l + 2)
                    continue;
                ++runs[i];
                PathEmbedding e = find_two_block_by_levels(d, k, l);
                bool ok = check_embedding(d, e) &&
                          e.blocks == std::vector<Block>{{Dir::forward, k}, {Dir::backward, l}};
                if (!ok)
                    fails[i] = "invalid two-block extraction for k=" + std::to_string(k) +
                               ", l=" + std::to_string(l);
            }
    });
    for (std::size_t i = 0; i < instances.size(); ++i) {
        r.counters["qualifying_runs"] += runs[i];
        if (!fails[i].empty())
            r.failures.push_back({format_arclist(instances[i]), fails[i]});
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

VerificationReport thm36_campaign(std::uint64_t seed, int jobs) {
    auto t0 = Clock::now();
    VerificationReport r;
    r.campaign = "thm36";
    r.orders = {4, 5, 6, 7, 8, 9, 10};
    r.seed = seed;

    std::vector<Digraph> instances;
    for (int n = 4; n <= 7; ++n)
        for (Digraph& t : enumerate_tournaments(n)) {
            instances.push_back(std::move(t));
            ++r.classes;
        }
    std::mt19937_64 rng(seed);
    const double probs[3] = {0.3, 0.5, 0.8};
    for (int i = 0; i < 1000; ++i) {
        instances.push_back(random_oriented_digraph(rand_int(rng, 4, 10), probs[i % 3], rng));
        ++r.samples;
    }

    std::vector<std::string> fails(instances.size());
    std::vector<long> runs(instances.size(), 0);
    run_indexed(static_cast<long>(instances.size()), jobs, [&](long i) {
        const Digraph& d = instances[i];
        int chi = chromatic_number(d).chi;
        if (chi < 4)
            return;
        for (int k = 1; k <= chi - 2 && fails[i].empty(); ++k) {
            int l = chi - 1 - k;
            ++runs[i];
            try {
                CertifiedOutcome out = find_two_block_certified(d, k, l);
                if (!out.is_embedding()) {
                    fails[i] = "coloring certificate returned although chi = k+l+1 (k=" +
                               std::to_string(k) + ", l=" + std::to_string(l) + ")";
                    continue;
                }
                bool ok = check_embedding(d, *out.embedding) &&
                          out.embedding->blocks ==
                              std::vector<Block>{{Dir::forward, k}, {Dir::backward, l}};
                if (!ok) {
                    fails[i] = "embedding certificate failed validation (k=" + std::to_string(k) +
                               ", l=" + std::to_string(l) + ")";
                    continue;
                }
                if (!find_pattern(d, BlockPattern::two_block(k, l)))
                    fails[i] = "certified embedding exists but brute force finds none (k=" +
                               std::to_string(k) + ", l=" + std::to_string(l) + ")";
            } catch (const std::exception& e) {
                fails[i] = std::string("exception: ") + e.what();
            }
        }
    });
    for (std::size_t i = 0; i < instances.size(); ++i) {
        r.counters["certified_runs"] += runs[i];
        if (!fails[i].empty())
            r.failures.push_back({format_arclist(instances[i]), fails[i]});
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

VerificationReport scan_conjecture_219(int max_n, std::uint64_t seed, int jobs) {
    auto t0 = Clock::now();
    VerificationReport r;
    r.campaign = "conj219";
    for (int n = 1; n <= max_n; ++n)
        r.orders.push_back(n);
    r.seed = seed;

    std::vector<Digraph> candidates; // pass the cheap degree filter
    long examined = 0;
    for (int n = 1; n <= std::min(5, max_n); ++n)
        for_each_oriented_graph(n, [&](const Digraph& d) {
            ++examined;
            if (d.min_out_degree() >= 2)
                candidates.push_back(d);
        });
    r.classes = examined;
    std::mt19937_64 rng(seed);
    const double probs[3] = {0.4, 0.6, 0.8};
    for (int n = 6; n <= max_n; ++n)
        for (int i = 0; i < 200; ++i) {
            Digraph d = random_oriented_digraph(n, probs[i % 3], rng);
            ++r.samples;
            if (d.min_out_degree() >= 2)
                candidates.push_back(std::move(d));
        }

    std::vector<std::string> fails(candidates.size());
    std::vector<char> qualifying(candidates.size(), 0);
    run_indexed(static_cast<long>(candidates.size()), jobs, [&](long i) {
        const Digraph& d = candidates[i];
        if (max_clique_size(d) >= 5)
            return;
        if (chromatic_number(d).chi != 5)
            return;
        qualifying[i] = 1;
        if (!find_pattern(d, BlockPattern::antidirected(4, Dir::backward)))
            fails[i] = "5-chromatic, no 5-clique, min out-degree >= 2, but the backward-first "
                       "antidirected path of length 4 is missing";
    });
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (qualifying[i])
            ++r.counters["qualifying_instances"];
        if (!fails[i].empty())
            r.failures.push_back({format_arclist(candidates[i]), fails[i]});
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

VerificationReport scan_conjecture_38(int max_n, std::uint64_t seed, int jobs) {
    auto t0 = Clock::now();
    VerificationReport r;
    r.campaign = "conj38";
    for (int n = 3; n <= max_n; ++n)
        r.orders.push_back(n);
    r.seed = seed;

    std::vector<Digraph> instances;
    for (int n = 3; n <= std::min(7, max_n); ++n)
        for (Digraph& t : enumerate_tournaments(n)) {
            instances.push_back(std::move(t));
            ++r.classes;
        }
    std::mt19937_64 rng(seed);
    for (int n = 8; n <= max_n; ++n) {
        for (int i = 0; i < 15; ++i) {
            instances.push_back(random_tournament(n, rng));
            ++r.samples;
        }
        for (int i = 0; i < 30; ++i) {
            instances.push_back(random_oriented_digraph(n, 0.9, rng));
            ++r.samples;
        }
    }

    std::vector<std::string> fails(instances.size());
    std::vector<long> misses(instances.size(), 0);
    std::vector<long> searched(instances.size(), 0);
    run_indexed(static_cast<long>(instances.size()), jobs, [&](long i) {
        const Digraph& d = instances[i];
        int chi = chromatic_number(d).chi;
        if (chi < 2)
            return;
        for (const BlockPattern& p : all_patterns_of_length(chi - 1)) {
            ++searched[i];
            if (find_pattern(d, p))
                continue;
            if (chi >= 8) {
                fails[i] = std::to_string(chi) + "-chromatic digraph missing the oriented path " +
                           p.str() + " of length " + std::to_string(chi - 1);
                return;
            }
            ++misses[i]; // known low-order regime, reported but not a counterexample
        }
    });
    for (std::size_t i = 0; i < instances.size(); ++i) {
        r.counters["patterns_searched"] += searched[i];
        r.counters["known_regime_misses"] += misses[i];
        if (!fails[i].empty())
            r.failures.push_back({format_arclist(instances[i]), fails[i]});
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

} // namespace chromapath
