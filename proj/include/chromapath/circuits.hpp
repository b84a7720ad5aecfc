#ifndef CHROMAPATH_CIRCUITS_HPP
#define CHROMAPATH_CIRCUITS_HPP

#include <optional>
#include <vector>

#include "chromapath/coloring.hpp"
#include "chromapath/digraph.hpp"

namespace chromapath {

/// Directed circuit given by its cyclic vertex list: consecutive arcs and
/// the closing arc all belong to the host. Minimum length 3 in oriented
/// hosts, 2 (a digon) when digons are permitted.
struct Circuit {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
};

bool is_circuit(const Digraph& d, const Circuit& c);

/// Partition of the vertex set into strongly connected components, each
/// sorted, ordered by smallest member.
std::vector<std::vector<int>> strong_components(const Digraph& d);

bool is_strongly_connected(const Digraph& d);

/// Minimum-length circuit among those of length >= k, or nullopt. Iterative
/// deepening over the target length; start vertices and neighbors ascending.
std::optional<Circuit> shortest_circuit_at_least(const Digraph& d, int k);

/// Exact longest circuit length via exhaustive search (0 if acyclic).
int longest_circuit_length(const Digraph& d);

/// For strongly connected d and 3 <= k <= chi(d): a circuit C with
/// |C| >= k and chi(d[V(C)]) <= k. Takes the shortest circuit of length at
/// least k and verifies its induced chromatic number with the exact solver;
/// a failed verification raises internal_inconsistency.
Circuit k_good_circuit(const Digraph& d, int k);

/// Handle decomposition: a base circuit followed by directed paths, each
/// meeting the union of the earlier pieces exactly at its end-vertices.
/// handles[i] lists the path's vertices including both ends (first == last
/// for a circuit handle); size-2 handles are single arcs (trivial).
struct HandleDecomposition {
    Circuit base;
    std::vector<std::vector<int>> handles;
    int trivial_count = 0;

    int handle_count() const { return 1 + static_cast<int>(handles.size()); } // r
};

/// Greedy construction preferring the longest available non-trivial handle;
/// trivial handles come last. Requires strong connectivity.
HandleDecomposition handle_decomposition(const Digraph& d);

/// Contract the vertex set of a circuit, multigraph mode (digons may appear).
ContractResult contract_circuit(const Digraph& d, const Circuit& c);

struct BondyReport {
    int chi = 0;
    int longest_circuit = 0;
    bool pass = false;
};

/// Exhaustively computes the longest circuit and checks it reaches chi(d).
/// Requires strong connectivity and order <= 10.
BondyReport verify_bondy(const Digraph& d);

} // namespace chromapath

#endif
