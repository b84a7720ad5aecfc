#include "chromapath/circuits.hpp"

#include <algorithm>
#include <functional>

namespace chromapath {

bool is_circuit(const Digraph& d, const Circuit& c) {
    int len = c.length();
    if (len < (d.oriented() ? 3 : 2))
        return false;
    std::vector<int> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (int i = 0; i < len; ++i) {
        int a = c.vertices[i], b = c.vertices[(i + 1) % len];
        if (a < 0 || a >= d.order() || !d.has_arc(a, b))
            return false;
    }
    return true;
}

namespace {

struct Tarjan {
    const Digraph& d;
    std::vector<int> index, low, stack;
    std::vector<char> on_stack;
    int counter = 0;
    std::vector<std::vector<int>> sccs;

    explicit Tarjan(const Digraph& dd)
        : d(dd), index(dd.order(), -1), low(dd.order(), 0), on_stack(dd.order(), 0) {}

    void visit(int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (int w : d.out_neighbors(v)) {
            if (index[w] == -1) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> comp;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            sccs.push_back(std::move(comp));
        }
    }
};

} // namespace

std::vector<std::vector<int>> strong_components(const Digraph& d) {
    Tarjan t(d);
    for (int v = 0; v < d.order(); ++v)
        if (t.index[v] == -1)
            t.visit(v);
    std::sort(t.sccs.begin(), t.sccs.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return t.sccs;
}

bool is_strongly_connected(const Digraph& d) {
    return strong_components(d).size() == 1;
}

namespace {

// Depth-limited search for a circuit of exactly the target length whose
// smallest vertex is the start; deterministic by ascending choices.
bool circuit_of_length(const Digraph& d, int target, Circuit& out) {
    int n = d.order();
    std::vector<char> used(n, 0);
    std::vector<int> path;
    std::function<bool(int, int)> dfs = [&](int start, int v) {
        if (static_cast<int>(path.size()) == target)
            return d.has_arc(v, start);
        for (int w : d.out_neighbors(v)) {
            if (w <= start || used[w])
                continue;
            used[w] = 1;
            path.push_back(w);
            if (dfs(start, w))
                return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        used.assign(n, 0);
        used[s] = 1;
        path.assign(1, s);
        if (dfs(s, s)) {
            out.vertices = path;
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<Circuit> shortest_circuit_at_least(const Digraph& d, int k) {
    if (k < 2)
        throw precondition_error("shortest_circuit_at_least: k must be at least 2");
    int lo = std::max(k, d.oriented() ? 3 : 2);
    for (int len = lo; len <= d.order(); ++len) {
        Circuit c;
        if (circuit_of_length(d, len, c))
            return c;
    }
    return std::nullopt;
}

int longest_circuit_length(const Digraph& d) {
    for (int len = d.order(); len >= (d.oriented() ? 3 : 2); --len) {
        Circuit c;
        if (circuit_of_length(d, len, c))
            return len;
    }
    return 0;
}

Circuit k_good_circuit(const Digraph& d, int k) {
    if (!is_strongly_connected(d))
        throw precondition_error("k_good_circuit: digraph is not strongly connected");
    int chi = chromatic_number(d).chi;
    if (k < 3 || k > chi)
        throw precondition_error("k_good_circuit: k must lie in 3..chi(D) = 3.." +
                                 std::to_string(chi));
    auto c = shortest_circuit_at_least(d, k);
    if (!c)
        throw internal_inconsistency("k_good_circuit: no circuit of length >= k in a strongly "
                                     "connected digraph with chi >= k");
    int chi_c = chromatic_number(induced(d, c->vertices).graph).chi;
    if (chi_c > k)
        throw internal_inconsistency("k_good_circuit: shortest circuit of length >= " +
                                     std::to_string(k) + " induces chromatic number " +
                                     std::to_string(chi_c));
    return *c;
}

namespace {

// Longest directed path from a covered vertex through new vertices back to a
// covered vertex. Endpoints may coincide. Exhaustive, ascending tie-break.
std::vector<int> longest_handle(const Digraph& d, const std::vector<char>& covered) {
    std::vector<int> best;
    std::vector<int> path;
    std::vector<char> used(d.order(), 0);
    std::function<void(int)> dfs = [&](int v) {
        for (int w : d.out_neighbors(v)) {
            if (covered[w]) {
                if (path.size() + 1 > best.size()) {
                    best = path;
                    best.push_back(w);
                }
                continue;
            }
            if (used[w])
                continue;
            used[w] = 1;
            path.push_back(w);
            dfs(w);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int u = 0; u < d.order(); ++u) {
        if (!covered[u])
            continue;
        path.assign(1, u);
        dfs(u);
    }
    // a handle must add at least one new vertex here
    return best.size() >= 3 ? best : std::vector<int>{};
}

} // namespace

HandleDecomposition handle_decomposition(const Digraph& d) {
    if (!is_strongly_connected(d))
        throw precondition_error("handle_decomposition: digraph is not strongly connected");

    if (d.order() < 2)
        throw precondition_error("handle_decomposition: trivial digraph has no handle decomposition");

    HandleDecomposition h;
    int base_len = longest_circuit_length(d);
    if (base_len == 0)
        throw internal_inconsistency("strongly connected digraph of order >= 2 has a circuit");
    auto sc = shortest_circuit_at_least(d, base_len);
    if (!sc)
        throw internal_inconsistency("longest circuit vanished on re-search");
    Circuit base = *sc;
    h.base = base;

    std::vector<char> covered(d.order(), 0);
    std::vector<char> arc_used(d.order() * d.order(), 0);
    auto mark_arc = [&](int u, int v) { arc_used[u * d.order() + v] = 1; };
    for (int i = 0; i < base.length(); ++i) {
        covered[base.vertices[i]] = 1;
        mark_arc(base.vertices[i], base.vertices[(i + 1) % base.length()]);
    }

    int uncovered = d.order() - base.length();
    while (uncovered > 0) {
        std::vector<int> handle = longest_handle(d, covered);
        if (handle.empty())
            throw internal_inconsistency("no handle found while vertices remain uncovered");
        for (std::size_t i = 0; i + 1 < handle.size(); ++i)
            mark_arc(handle[i], handle[i + 1]);
        for (std::size_t i = 1; i + 1 < handle.size(); ++i) {
            covered[handle[i]] = 1;
            --uncovered;
        }
        h.handles.push_back(std::move(handle));
    }
    for (auto [u, v] : d.arcs()) {
        if (arc_used[u * d.order() + v])
            continue;
        h.handles.push_back({u, v});
        ++h.trivial_count;
    }
    return h;
}

ContractResult contract_circuit(const Digraph& d, const Circuit& c) {
    if (!is_circuit(d, c))
        throw precondition_error("contract_circuit: not a circuit of the digraph");
    return contract(d, c.vertices, ContractMode::multigraph);
}

BondyReport verify_bondy(const Digraph& d) {
    if (!is_strongly_connected(d))
        throw precondition_error("verify_bondy: digraph is not strongly connected");
    if (d.order() > 10)
        throw precondition_error("verify_bondy: exhaustive search capped at order 10");
    BondyReport r;
    r.chi = chromatic_number(d).chi;
    r.longest_circuit = longest_circuit_length(d);
    r.pass = r.longest_circuit >= r.chi;
    return r;
}

} // namespace chromapath
