#ifndef CHROMAPATH_PATHFIND_HPP
#define CHROMAPATH_PATHFIND_HPP

#include <optional>
#include <string>
#include <vector>

#include "chromapath/coloring.hpp"
#include "chromapath/digraph.hpp"
#include "chromapath/path_embedding.hpp"

namespace chromapath {

/// Oriented-path shape: alternating blocks of forward/backward arcs.
struct BlockPattern {
    std::vector<Block> blocks;

    int total_length() const;

    static BlockPattern two_block(int k, int l);      // k forward, l backward
    static BlockPattern antidirected(int length, Dir first);
    static BlockPattern p4();                         // b1,f1,b1,f1

    /// Parse tokens like "b1,f2" (direction letter + block length).
    static BlockPattern parse(const std::string& text);

    std::string str() const;
};

/// Exhaustive backtracking search for an occurrence of the pattern.
/// Returns the lexicographically first embedding or nullopt.
std::optional<PathEmbedding> find_pattern(const Digraph& d, const BlockPattern& pattern);

/// find_pattern specialization for the antidirected length-4 path.
std::optional<PathEmbedding> find_p4(const Digraph& d);

/// Certified outcome of the two-block search: exactly one of the fields is
/// engaged. The embedding is a P(k,l); the coloring is proper with at most
/// k+l colors and certifies chi(d) <= k+l.
struct CertifiedOutcome {
    std::optional<PathEmbedding> embedding;
    std::optional<VertexColoring> coloring;

    bool is_embedding() const { return embedding.has_value(); }
};

/// Certifying two-block finder. Requires k, l >= 1 and k+l >= 3. Either
/// returns a validated P(k,l) embedding, or assembles a proper coloring of d
/// with k+l colors; whenever chi(d) >= k+l+1 the outcome is an embedding.
CertifiedOutcome find_two_block_certified(const Digraph& d, int k, int l);

} // namespace chromapath

#endif
