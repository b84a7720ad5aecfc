#ifndef CHROMAPATH_PATH_EMBEDDING_HPP
#define CHROMAPATH_PATH_EMBEDDING_HPP

#include <string>
#include <vector>

#include "chromapath/digraph.hpp"

namespace chromapath {

enum class Dir { forward, backward };

struct Block {
    Dir dir;
    int len; // >= 1

    bool operator==(const Block&) const = default;
};

/// A witnessed occurrence of an oriented path inside a host digraph.
/// vertices[0..L] traversed left to right; blocks give the arc directions
/// relative to the traversal, strictly alternating. A single vertex is the
/// trivial embedding (no blocks).
struct PathEmbedding {
    std::vector<int> vertices;
    std::vector<Block> blocks;

    int length() const; // number of arcs
};

/// Expand blocks into one Dir per arc.
std::vector<Dir> arc_directions(const std::vector<Block>& blocks);

/// Independent validity check: vertices distinct and in range, block lengths
/// >= 1, directions strictly alternating, every implied arc present in d.
bool check_embedding(const Digraph& d, const PathEmbedding& e);

/// Reverse the traversal: a P(k,l) embedding becomes a P(l,k) embedding.
PathEmbedding reverse_embedding(const PathEmbedding& e);

std::string block_token(const Block& b);             // "f2", "b1", ...
std::string blocks_string(const std::vector<Block>& blocks); // "f2,b1"

} // namespace chromapath

#endif
