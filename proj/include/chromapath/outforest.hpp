#ifndef CHROMAPATH_OUTFOREST_HPP
#define CHROMAPATH_OUTFOREST_HPP

#include <vector>

#include "chromapath/coloring.hpp"
#include "chromapath/digraph.hpp"
#include "chromapath/path_embedding.hpp"

namespace chromapath {

/// Spanning out-forest of a host digraph (optionally restricted to a subset
/// of vertices). Every contained vertex has at most one parent, parent arcs
/// belong to the host, and level(v) = 1 + level(parent(v)) with roots at
/// level 1 -- the order of the longest forest path ending at v.
class OutForest {
public:
    OutForest(Digraph host, std::vector<char> alive, std::vector<int> parent);

    const Digraph& host() const { return host_; }
    bool contains(int v) const { return alive_[v]; }
    std::vector<int> vertices() const;

    int parent(int v) const; // -1 for roots
    int level(int v) const;
    int max_level() const;
    std::vector<int> vertices_at_level(int i) const;

    /// Forest path from the root down to v, inclusive.
    std::vector<int> path_to(int v) const;

    /// True iff a directed forest path runs from a to v (a == v counts).
    bool is_forest_ancestor(int a, int v) const;

    /// Subtree rooted at v, including v.
    std::vector<int> descendants(int v) const;

    std::vector<Arc> forest_arcs() const;

    /// Maximality predicate: every host arc (x,y) between contained vertices
    /// with level(x) >= level(y) has y on the forest path to x.
    bool is_maximal() const;

private:
    friend OutForest maximal_closure_restricted(const Digraph&, const std::vector<char>&,
                                                const OutForest*);
    void recompute_levels();

    Digraph host_; // owned copy: forests stay valid on their own
    std::vector<char> alive_;
    std::vector<int> parent_;
    std::vector<int> level_;
};

/// Maximal spanning out-forest built from the arcless forest by elementary
/// improvements, arcs scanned in ascending (tail, head) order, first
/// violating arc improved, repeated to a fixpoint.
OutForest maximal_closure(const Digraph& d);

/// Same, but starting from a given spanning out-forest. Throws if f0 is not
/// a spanning out-forest of d.
OutForest maximal_closure(const Digraph& d, const OutForest& f0);

/// Closure over a vertex subset. When seed is given, its parent links among
/// alive vertices are kept (vertices whose parent died become roots).
OutForest maximal_closure_restricted(const Digraph& d, const std::vector<char>& alive,
                                     const OutForest* seed);

/// Forest path of a maximum-level vertex of a maximal closure: a directed
/// path whose order is at least chi(d).
PathEmbedding gallai_roy_path(const Digraph& d);

/// Two-block path carved out of a maximal forest around the arc (v,w) with
/// i = level(v), j = level(w):
///   case 1 (k <= i < j-l): k forward arcs ending at w through v, then l
///     backward arcs up the forest path of w;
///   case 2 (k < j <= i-l): k forward arcs ending at w along w's forest
///     path, then (v,w) and l-1 backward arcs up the forest path of v.
/// Throws when neither case applies.
PathEmbedding level_gap_path(const OutForest& f, Arc arc, int k, int l);

/// Level-based coloring: level i < k gets color i; level i >= k gets the
/// color j in {k..k+l} with j == i (mod l+1).
VertexColoring canonical_coloring(const OutForest& f, int k, int l);

/// For chi(d) >= k+l+2: build a maximal closure, color levels 1..k with
/// 1..k and higher levels modulo l+1, locate a violating arc, and extract
/// the level-gap path. Throws precondition_error when chi(d) < k+l+2.
PathEmbedding find_two_block_by_levels(const Digraph& d, int k, int l);

/// DOT export with forest arcs solid and the remaining host arcs dashed.
std::string to_dot(const Digraph& d, const OutForest& f);

} // namespace chromapath

#endif
