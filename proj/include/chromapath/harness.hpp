#ifndef CHROMAPATH_HARNESS_HPP
#define CHROMAPATH_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "chromapath/digraph.hpp"

namespace chromapath {

// --- fixtures -----------------------------------------------------------

Digraph directed_path(int n);
Digraph directed_cycle(int n);
Digraph transitive_tournament(int n);

/// The 2-regular 5-tournament: arcs i->i+1 and i->i+2 (mod 5).
Digraph build_t5();

/// T5 plus a sixth vertex with the single arc 5->0.
Digraph build_elsahili_example();

// --- enumeration and sampling -------------------------------------------

/// All n-vertex tournaments, one representative per isomorphism class.
/// Capped at n <= 7 (class counts explode beyond).
std::vector<Digraph> enumerate_tournaments(int n);

/// Same classes generated by extending with the reversed orientation order;
/// used to cross-check enumeration soundness.
std::vector<Digraph> enumerate_tournaments_alt(int n);

/// Visit all 3^(n choose 2) oriented graphs on n labeled vertices (n <= 5).
void for_each_oriented_graph(int n, const std::function<void(const Digraph&)>& fn);

/// Deterministic helpers on top of std::mt19937_64 (no std distributions,
/// so streams are identical across standard libraries).
double rand_unit(std::mt19937_64& rng);
int rand_int(std::mt19937_64& rng, int lo, int hi);

Digraph random_oriented_digraph(int n, double arc_prob, std::mt19937_64& rng);
Digraph random_tournament(int n, std::mt19937_64& rng);

/// Rejection-samples an oriented digraph until strongly connected,
/// densifying the arc probability on repeated failures.
Digraph random_strongly_connected(int n, double arc_prob, std::mt19937_64& rng);

// --- verification campaigns ----------------------------------------------

struct ReportFailure {
    std::string arclist; // machine-checkable witness, arc-list format
    std::string detail;
};

struct VerificationReport {
    std::string campaign;
    std::vector<int> orders;
    long classes = 0; // exhaustively enumerated instances
    long samples = 0; // randomly sampled instances
    std::uint64_t seed = 0;
    std::map<std::string, long> counters; // campaign-specific scope extras
    std::vector<ReportFailure> failures;
    long elapsed_ms = 0;

    bool pass() const { return failures.empty(); }
    std::string to_json() const; // {campaign, scope:{...}, failures:[...], elapsed_ms}
};

/// Enumerates the 5-tournament classes and checks exactly one is free of the
/// antidirected length-4 path, and that it is the 2-regular tournament.
VerificationReport verify_grunbaum();

/// Longest circuit >= chi over strongly connected tournaments (orders 3..7)
/// plus seeded strongly connected samples up to order 9.
VerificationReport bondy_campaign(std::uint64_t seed, int jobs);

/// Two-block extraction from an improper (k+l+1)-coloring, k,l in {1,2},
/// over seeded samples whose chromatic number is large enough.
VerificationReport cor32_campaign(std::uint64_t seed, int jobs);

/// Certified two-block search over exhaustive tournaments (orders <= 7) and
/// seeded samples (n <= 10): whenever chi = k+l+1 >= 4 the outcome must be a
/// valid embedding, and the brute-force oracle must agree.
VerificationReport thm36_campaign(std::uint64_t seed, int jobs);

/// Scan for 5-chromatic digraphs without a 5-clique, minimum out-degree 2,
/// missing the backward-first antidirected path of length 4.
VerificationReport scan_conjecture_219(int max_n, std::uint64_t seed, int jobs);

/// Scan digraphs for oriented paths of every shape of length chi-1; misses
/// with chi >= 8 are counterexamples, smaller chi misses are recorded as the
/// known low-order exceptions.
VerificationReport scan_conjecture_38(int max_n, std::uint64_t seed, int jobs);

} // namespace chromapath

#endif
