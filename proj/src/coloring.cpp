#include "chromapath/coloring.hpp"

#include <algorithm>

namespace chromapath {

bool is_proper(const Digraph& d, const VertexColoring& c) {
    if (static_cast<int>(c.color.size()) != d.order())
        throw precondition_error("coloring does not cover the vertex set");
    for (int v = 0; v < d.order(); ++v)
        if (c.color[v] < 1 || c.color[v] > c.k)
            throw precondition_error("vertex " + std::to_string(v) + " colored outside 1..k");
    for (auto [u, v] : d.arcs())
        if (c.color[u] == c.color[v])
            return false;
    return true;
}

namespace {

// Underlying-graph adjacency lists, sorted.
std::vector<std::vector<int>> underlying(const Digraph& d) {
    std::vector<std::vector<int>> adj(d.order());
    for (int v = 0; v < d.order(); ++v)
        adj[v] = d.neighbors(v);
    return adj;
}

struct CliqueSearch {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> best;

    bool connected(int u, int v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    void extend(std::vector<int>& clique, std::vector<int>& cand) {
        if (clique.size() + cand.size() <= best.size())
            return;
        if (cand.empty()) {
            if (clique.size() > best.size())
                best = clique;
            return;
        }
        while (!cand.empty()) {
            if (clique.size() + cand.size() <= best.size())
                return;
            int v = cand.back();
            cand.pop_back();
            std::vector<int> next;
            for (int w : cand)
                if (connected(v, w))
                    next.push_back(w);
            clique.push_back(v);
            extend(clique, next);
            clique.pop_back();
        }
    }
};

struct ColorSearch {
    const std::vector<std::vector<int>>& adj;
    int n;
    int k;
    std::vector<int> color; // 0 = uncolored

    bool feasible(int v, int c) const {
        for (int w : adj[v])
            if (color[w] == c)
                return false;
        return true;
    }

    // DSATUR vertex choice: max distinct neighbor colors, then max degree,
    // then min id.
    int pick() const {
        int bestv = -1, bestsat = -1, bestdeg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != 0)
                continue;
            std::vector<char> seen(k + 1, 0);
            int sat = 0;
            for (int w : adj[v])
                if (color[w] != 0 && !seen[color[w]]) {
                    seen[color[w]] = 1;
                    ++sat;
                }
            int deg = static_cast<int>(adj[v].size());
            if (sat > bestsat || (sat == bestsat && deg > bestdeg)) {
                bestv = v;
                bestsat = sat;
                bestdeg = deg;
            }
        }
        return bestv;
    }

    bool solve(int colored, int used) {
        if (colored == n)
            return true;
        int v = pick();
        int limit = std::min(k, used + 1); // new colors introduced in order
        for (int c = 1; c <= limit; ++c) {
            if (!feasible(v, c))
                continue;
            color[v] = c;
            if (solve(colored + 1, std::max(used, c)))
                return true;
            color[v] = 0;
        }
        return false;
    }
};

VertexColoring dsatur_greedy(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    VertexColoring c;
    c.color.assign(n, 0);
    for (int step = 0; step < n; ++step) {
        int bestv = -1, bestsat = -1, bestdeg = -1;
        for (int v = 0; v < n; ++v) {
            if (c.color[v] != 0)
                continue;
            std::vector<char> seen(n + 2, 0);
            int sat = 0;
            for (int w : adj[v])
                if (c.color[w] != 0 && !seen[c.color[w]]) {
                    seen[c.color[w]] = 1;
                    ++sat;
                }
            int deg = static_cast<int>(adj[v].size());
            if (sat > bestsat || (sat == bestsat && deg > bestdeg)) {
                bestv = v;
                bestsat = sat;
                bestdeg = deg;
            }
        }
        std::vector<char> used(n + 2, 0);
        for (int w : adj[bestv])
            if (c.color[w] != 0)
                used[c.color[w]] = 1;
        int col = 1;
        while (used[col])
            ++col;
        c.color[bestv] = col;
        c.k = std::max(c.k, col);
    }
    return c;
}

} // namespace

int max_clique_size(const Digraph& d) {
    auto adj = underlying(d);
    std::vector<int> order(d.order());
    for (int v = 0; v < d.order(); ++v)
        order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return adj[a].size() < adj[b].size(); });
    CliqueSearch cs{adj, {}};
    std::vector<int> clique;
    cs.extend(clique, order);
    return static_cast<int>(cs.best.size());
}

ChromaticResult chromatic_number(const Digraph& d) {
    if (d.order() < 1)
        throw precondition_error("chromatic_number: digraph must have a vertex");
    auto adj = underlying(d);
    VertexColoring best = dsatur_greedy(adj);
    // binary search between the clique bound and the greedy bound;
    // k-colorability is monotone in k
    int lo = max_clique_size(d), hi = best.k;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        ColorSearch s{adj, d.order(), mid, std::vector<int>(d.order(), 0)};
        if (s.solve(0, 0)) {
            best = {std::move(s.color), mid};
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    best.k = lo;
    return {lo, std::move(best)};
}

CriticalResult k_critical_subdigraph(const Digraph& d, int k) {
    if (chromatic_number(d).chi < k)
        throw precondition_error("k_critical_subdigraph: chi(D) < k");
    Digraph cur = d;
    std::vector<int> to_host(d.order());
    for (int v = 0; v < d.order(); ++v)
        to_host[v] = v;

    bool removed = true;
    while (removed) {
        removed = false;
        for (int v = 0; v < cur.order(); ++v) {
            std::vector<int> rest;
            for (int w = 0; w < cur.order(); ++w)
                if (w != v)
                    rest.push_back(w);
            if (rest.empty())
                break;
            InducedResult sub = induced(cur, rest);
            if (chromatic_number(sub.graph).chi >= k) {
                std::vector<int> next_map(sub.graph.order());
                for (int w = 0; w < sub.graph.order(); ++w)
                    next_map[w] = to_host[sub.to_host[w]];
                cur = std::move(sub.graph);
                to_host = std::move(next_map);
                removed = true;
                break;
            }
        }
    }
    return {std::move(cur), std::move(to_host)};
}

} // namespace chromapath
