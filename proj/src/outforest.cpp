#include "chromapath/outforest.hpp"

#include <algorithm>

namespace chromapath {

OutForest::OutForest(Digraph host, std::vector<char> alive, std::vector<int> parent)
    : host_(std::move(host)), alive_(std::move(alive)), parent_(std::move(parent)),
      level_(host_.order(), 0) {
    if (static_cast<int>(alive_.size()) != host_.order() ||
        static_cast<int>(parent_.size()) != host_.order())
        throw precondition_error("out-forest tables must cover the host vertex set");
    for (int v = 0; v < host_.order(); ++v) {
        if (!alive_[v]) {
            parent_[v] = -1;
            continue;
        }
        int p = parent_[v];
        if (p == -1)
            continue;
        if (p < 0 || p >= host_.order() || !alive_[p] || !host_.has_arc(p, v))
            throw precondition_error("parent link " + std::to_string(p) + "->" +
                                     std::to_string(v) + " is not a host arc");
    }
    recompute_levels();
}

void OutForest::recompute_levels() {
    int n = host_.order();
    level_.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!alive_[v] || level_[v] != 0)
            continue;
        // climb to the first vertex with a known level, then unwind
        std::vector<int> chain;
        int cur = v;
        std::vector<char> on_chain(n, 0);
        while (cur != -1 && level_[cur] == 0) {
            if (on_chain[cur])
                throw precondition_error("parent links contain a cycle");
            on_chain[cur] = 1;
            chain.push_back(cur);
            cur = parent_[cur];
        }
        int base = cur == -1 ? 0 : level_[cur];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            level_[*it] = ++base;
    }
}

std::vector<int> OutForest::vertices() const {
    std::vector<int> r;
    for (int v = 0; v < host_.order(); ++v)
        if (alive_[v])
            r.push_back(v);
    return r;
}

int OutForest::parent(int v) const {
    if (v < 0 || v >= host_.order() || !alive_[v])
        throw precondition_error("vertex " + std::to_string(v) + " not in forest");
    return parent_[v];
}

int OutForest::level(int v) const {
    if (v < 0 || v >= host_.order() || !alive_[v])
        throw precondition_error("vertex " + std::to_string(v) + " not in forest");
    return level_[v];
}

int OutForest::max_level() const {
    int r = 0;
    for (int v = 0; v < host_.order(); ++v)
        if (alive_[v])
            r = std::max(r, level_[v]);
    return r;
}

std::vector<int> OutForest::vertices_at_level(int i) const {
    std::vector<int> r;
    for (int v = 0; v < host_.order(); ++v)
        if (alive_[v] && level_[v] == i)
            r.push_back(v);
    return r;
}

std::vector<int> OutForest::path_to(int v) const {
    level(v); // range/alive check
    std::vector<int> r;
    for (int cur = v; cur != -1; cur = parent_[cur])
        r.push_back(cur);
    std::reverse(r.begin(), r.end());
    return r;
}

bool OutForest::is_forest_ancestor(int a, int v) const {
    level(a);
    level(v);
    for (int cur = v; cur != -1; cur = parent_[cur])
        if (cur == a)
            return true;
    return false;
}

std::vector<int> OutForest::descendants(int v) const {
    level(v);
    std::vector<int> r;
    for (int w = 0; w < host_.order(); ++w)
        if (alive_[w] && is_forest_ancestor(v, w))
            r.push_back(w);
    return r;
}

std::vector<Arc> OutForest::forest_arcs() const {
    std::vector<Arc> r;
    for (int v = 0; v < host_.order(); ++v)
        if (alive_[v] && parent_[v] != -1)
            r.emplace_back(parent_[v], v);
    std::sort(r.begin(), r.end());
    return r;
}

bool OutForest::is_maximal() const {
    for (auto [x, y] : host_.arcs()) {
        if (!alive_[x] || !alive_[y])
            continue;
        if (level_[x] >= level_[y] && !is_forest_ancestor(y, x))
            return false;
    }
    return true;
}

namespace {

// Shared improvement loop. Scans arcs ascending, improves the first
// violating arc, restarts; the level sum strictly increases each round.
void close(const Digraph& d, std::vector<char>& alive, std::vector<int>& parent,
           std::vector<int>& level) {
    auto recompute = [&]() {
        level.assign(d.order(), 0);
        for (int v = 0; v < d.order(); ++v) {
            if (!alive[v] || level[v] != 0)
                continue;
            std::vector<int> chain;
            int cur = v;
            while (cur != -1 && level[cur] == 0) {
                chain.push_back(cur);
                cur = parent[cur];
            }
            int base = cur == -1 ? 0 : level[cur];
            for (auto it = chain.rbegin(); it != chain.rend(); ++it)
                level[*it] = ++base;
        }
    };
    auto ancestor = [&](int a, int v) {
        for (int cur = v; cur != -1; cur = parent[cur])
            if (cur == a)
                return true;
        return false;
    };
    recompute();
    bool improved = true;
    while (improved) {
        improved = false;
        for (auto [x, y] : d.arcs()) {
            if (!alive[x] || !alive[y])
                continue;
            if (level[x] >= level[y] && !ancestor(y, x)) {
                parent[y] = x;
                recompute();
                improved = true;
                break;
            }
        }
    }
}

} // namespace

OutForest maximal_closure_restricted(const Digraph& d, const std::vector<char>& alive,
                                     const OutForest* seed) {
    std::vector<int> parent(d.order(), -1);
    if (seed) {
        for (int v = 0; v < d.order(); ++v) {
            if (!alive[v] || !seed->contains(v))
                continue;
            int p = seed->parent(v);
            if (p != -1 && alive[p])
                parent[v] = p; // orphaned vertices fall back to roots
        }
    }
    std::vector<char> a = alive;
    std::vector<int> level;
    close(d, a, parent, level);
    return OutForest(d, std::move(a), std::move(parent));
}

OutForest maximal_closure(const Digraph& d) {
    std::vector<char> alive(d.order(), 1);
    return maximal_closure_restricted(d, alive, nullptr);
}

OutForest maximal_closure(const Digraph& d, const OutForest& f0) {
    if (f0.host().order() != d.order())
        throw precondition_error("seed forest does not span the digraph");
    std::vector<char> alive(d.order(), 1);
    for (int v = 0; v < d.order(); ++v)
        if (!f0.contains(v))
            throw precondition_error("seed forest does not span the digraph");
    std::vector<int> parent(d.order());
    for (int v = 0; v < d.order(); ++v) {
        parent[v] = f0.parent(v);
        if (parent[v] != -1 && !d.has_arc(parent[v], v))
            throw precondition_error("seed forest arc " + std::to_string(parent[v]) + "->" +
                                     std::to_string(v) + " is not an arc of the digraph");
    }
    std::vector<int> level;
    close(d, alive, parent, level);
    return OutForest(d, std::move(alive), std::move(parent));
}

PathEmbedding gallai_roy_path(const Digraph& d) {
    OutForest f = maximal_closure(d);
    int top = f.max_level();
    int best = -1;
    for (int v = 0; v < d.order(); ++v)
        if (f.contains(v) && f.level(v) == top) {
            best = v;
            break;
        }
    PathEmbedding e;
    e.vertices = f.path_to(best);
    if (e.vertices.size() > 1)
        e.blocks.push_back({Dir::forward, static_cast<int>(e.vertices.size()) - 1});
    return e;
}

PathEmbedding level_gap_path(const OutForest& f, Arc arc, int k, int l) {
    if (k < 1 || l < 1)
        throw precondition_error("level_gap_path: block lengths must be at least 1");
    auto [v, w] = arc;
    if (!f.host().has_arc(v, w))
        throw precondition_error("level_gap_path: (v,w) is not a host arc");
    int i = f.level(v);
    int j = f.level(w);

    PathEmbedding e;
    if (k <= i && i < j - l) {
        // forward: k-1 forest arcs ending at v, then (v,w); backward: l arcs
        // up the forest path of w
        std::vector<int> pv = f.path_to(v);
        std::vector<int> pw = f.path_to(w);
        for (int t = i - k; t < i; ++t)
            e.vertices.push_back(pv[t]);
        e.vertices.push_back(w);
        for (int t = j - 2; t >= j - l - 1; --t)
            e.vertices.push_back(pw[t]);
        e.blocks = {{Dir::forward, k}, {Dir::backward, l}};
    } else if (k < j && j <= i - l) {
        // forward: k forest arcs ending at w; backward: (v,w) then l-1 arcs
        // up the forest path of v
        std::vector<int> pv = f.path_to(v);
        std::vector<int> pw = f.path_to(w);
        for (int t = j - k - 1; t < j; ++t)
            e.vertices.push_back(pw[t]);
        for (int t = i - 1; t >= i - l; --t)
            e.vertices.push_back(pv[t]);
        e.blocks = {{Dir::forward, k}, {Dir::backward, l}};
    } else {
        throw precondition_error("level_gap_path: levels i=" + std::to_string(i) +
                                 ", j=" + std::to_string(j) + " satisfy neither case for k=" +
                                 std::to_string(k) + ", l=" + std::to_string(l));
    }
    if (!check_embedding(f.host(), e))
        throw internal_inconsistency("level_gap_path produced an invalid embedding");
    return e;
}

VertexColoring canonical_coloring(const OutForest& f, int k, int l) {
    if (k < 1 || l < 1)
        throw precondition_error("canonical_coloring: k and l must be at least 1");
    VertexColoring c;
    c.color.assign(f.host().order(), 1);
    c.k = k + l;
    for (int v = 0; v < f.host().order(); ++v) {
        if (!f.contains(v))
            continue;
        int i = f.level(v);
        c.color[v] = i < k ? i : k + (i - k) % (l + 1);
    }
    return c;
}

PathEmbedding find_two_block_by_levels(const Digraph& d, int k, int l) {
    if (k < 1 || l < 1)
        throw precondition_error("find_two_block_by_levels: k and l must be at least 1");
    int chi = chromatic_number(d).chi;
    if (chi < k + l + 2)
        throw precondition_error("find_two_block_by_levels: chi(D) = " + std::to_string(chi) +
                                 " < k+l+2 = " + std::to_string(k + l + 2));
    OutForest f = maximal_closure(d);
    // k+l+1 colors: levels 1..k keep their index, higher levels cycle mod l+1
    VertexColoring col = canonical_coloring(f, k + 1, l);
    for (auto [x, y] : d.arcs())
        if (col.color[x] == col.color[y])
            return level_gap_path(f, {x, y}, k, l);
    throw internal_inconsistency("find_two_block_by_levels: coloring with k+l+1 colors was proper");
}

std::string to_dot(const Digraph& d, const OutForest& f) {
    std::vector<Arc> solid = f.forest_arcs();
    std::string s = "digraph G {\n";
    for (auto [u, v] : d.arcs()) {
        bool in_forest = std::binary_search(solid.begin(), solid.end(), Arc{u, v});
        s += "  " + std::to_string(u) + " -> " + std::to_string(v);
        if (!in_forest)
            s += " [style=dashed]";
        s += ";\n";
    }
    s += "}\n";
    return s;
}

} // namespace chromapath
