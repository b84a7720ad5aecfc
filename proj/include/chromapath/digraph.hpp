#ifndef CHROMAPATH_DIGRAPH_HPP
#define CHROMAPATH_DIGRAPH_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromapath/errors.hpp"

namespace chromapath {

using Arc = std::pair<int, int>;

/// Finite digraph on vertices 0..n-1. Arcs are ordered pairs; loops and
/// duplicate arcs are always rejected. With oriented() == true the digraph
/// additionally excludes digons: (x,y) present implies (y,x) absent.
/// Once built, values are treated as immutable and are safe to share
/// between threads; every operation below is a pure function.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n, bool oriented = true);

    int order() const { return n_; }
    int arc_count() const { return m_; }
    bool oriented() const { return oriented_; }

    /// Throws precondition_error on loops, range errors, duplicates, and
    /// digons in oriented mode.
    void add_arc(int tail, int head);

    bool has_arc(int tail, int head) const;
    bool adjacent(int u, int v) const; // adjacency in the underlying graph

    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
    std::vector<int> neighbors(int v) const; // underlying, sorted, distinct

    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    int degree(int v) const; // underlying

    int max_out_degree() const;
    int min_out_degree() const;
    int max_in_degree() const;
    int min_in_degree() const;

    std::vector<Arc> arcs() const; // ascending (tail, head)

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    bool oriented_ = true;
    std::vector<std::vector<int>> out_, in_; // kept sorted ascending
};

/// Parse the arc-list text format:
///   line 1:           "<n> <m>"  (optionally "<n> <m> multi" to permit digons)
///   next m lines:     "<tail> <head>"
/// Lines starting with '#' are comments. LF line endings. Every malformed
/// input raises parse_error naming the offending line.
Digraph parse_arclist(std::string_view text);

/// Inverse of parse_arclist, LF line endings, arcs ascending.
std::string format_arclist(const Digraph& d);

/// Graphviz export: one "u -> v;" line per arc inside "digraph G { ... }".
std::string to_dot(const Digraph& d);

struct InducedResult {
    Digraph graph;
    std::vector<int> to_host; // to_host[new id] = host id
};

/// D[S] with vertices relabeled 0..|S|-1 in ascending host order.
InducedResult induced(const Digraph& d, const std::vector<int>& s);

enum class ContractMode { digraph, multigraph };

struct ContractResult {
    Digraph graph;            // oriented flag is false: parallels collapsed, loops dropped
    std::vector<int> to_host; // to_host[new id] = host id; -1 for the merged vertex
    int merged;               // new id of the vertex standing for H
};

/// Contract the vertex set H to a single vertex. In digraph mode every
/// vertex outside H must see H in one direction only; the error names the
/// first offending vertex. Multigraph mode waives the check, so digons may
/// appear in the result.
ContractResult contract(const Digraph& d, const std::vector<int>& h,
                        ContractMode mode = ContractMode::digraph);

/// True iff every unordered pair of distinct vertices carries exactly one arc.
bool is_tournament(const Digraph& d);

/// Canonical label: equal strings iff the digraphs are isomorphic.
/// Refinement plus individualization backtracking; exact, meant for n <= 10.
std::string canonical_form(const Digraph& d);

} // namespace chromapath

#endif
