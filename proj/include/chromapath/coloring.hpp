#ifndef CHROMAPATH_COLORING_HPP
#define CHROMAPATH_COLORING_HPP

#include <vector>

#include "chromapath/digraph.hpp"

namespace chromapath {

/// Vertex -> color map with colors drawn from 1..k.
struct VertexColoring {
    std::vector<int> color; // indexed by vertex
    int k = 0;
};

/// True iff no arc joins two equally colored vertices. Throws if the map
/// does not cover the vertex set or uses colors outside 1..k.
bool is_proper(const Digraph& d, const VertexColoring& c);

struct ChromaticResult {
    int chi = 0;
    VertexColoring witness;
};

/// Exact chromatic number of the underlying graph with a proper witness.
/// DSATUR upper bound, maximum-clique lower bound, backtracking in between.
ChromaticResult chromatic_number(const Digraph& d);

/// Size of a maximum clique of the underlying graph (exact).
int max_clique_size(const Digraph& d);

struct CriticalResult {
    Digraph graph;
    std::vector<int> to_host; // to_host[new id] = host id
};

/// Induced subdigraph D' with chi(D') = k and chi(D' - v) < k for every v.
/// Vertices are dropped in ascending id order, rescanning until stable.
/// Requires chi(D) >= k.
CriticalResult k_critical_subdigraph(const Digraph& d, int k);

} // namespace chromapath

#endif
