#include "chromapath/pathfind.hpp"

#include <algorithm>
#include <functional>

#include "chromapath/circuits.hpp"
#include "chromapath/outforest.hpp"

namespace chromapath {

int BlockPattern::total_length() const {
    int r = 0;
    for (const auto& b : blocks)
        r += b.len;
    return r;
}

BlockPattern BlockPattern::two_block(int k, int l) {
    if (k < 1 || l < 1)
        throw precondition_error("two_block: block lengths must be at least 1");
    return {{{Dir::forward, k}, {Dir::backward, l}}};
}

BlockPattern BlockPattern::antidirected(int length, Dir first) {
    if (length < 1)
        throw precondition_error("antidirected: length must be at least 1");
    BlockPattern p;
    Dir d = first;
    for (int i = 0; i < length; ++i) {
        p.blocks.push_back({d, 1});
        d = d == Dir::forward ? Dir::backward : Dir::forward;
    }
    return p;
}

BlockPattern BlockPattern::p4() {
    return antidirected(4, Dir::backward);
}

BlockPattern BlockPattern::parse(const std::string& text) {
    BlockPattern p;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        std::string tok = text.substr(start, end == std::string::npos ? std::string::npos
                                                                      : end - start);
        if (tok.size() < 2 || (tok[0] != 'f' && tok[0] != 'b'))
            throw precondition_error("pattern token \"" + tok + "\" must be f<len> or b<len>");
        int len = 0;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            if (tok[i] < '0' || tok[i] > '9')
                throw precondition_error("pattern token \"" + tok + "\" must be f<len> or b<len>");
            len = len * 10 + (tok[i] - '0');
        }
        if (len < 1)
            throw precondition_error("pattern block length must be at least 1");
        Dir d = tok[0] == 'f' ? Dir::forward : Dir::backward;
        if (!p.blocks.empty() && p.blocks.back().dir == d)
            throw precondition_error("pattern blocks must alternate direction");
        p.blocks.push_back({d, len});
        if (end == std::string::npos)
            break;
        start = end + 1;
    }
    if (p.blocks.empty())
        throw precondition_error("pattern must contain at least one block");
    return p;
}

std::string BlockPattern::str() const {
    return blocks_string(blocks);
}

std::optional<PathEmbedding> find_pattern(const Digraph& d, const BlockPattern& pattern) {
    if (pattern.blocks.empty())
        throw precondition_error("find_pattern: empty pattern");
    for (std::size_t i = 0; i < pattern.blocks.size(); ++i) {
        if (pattern.blocks[i].len < 1)
            throw precondition_error("find_pattern: block length must be at least 1");
        if (i > 0 && pattern.blocks[i].dir == pattern.blocks[i - 1].dir)
            throw precondition_error("find_pattern: blocks must alternate direction");
    }
    auto dirs = arc_directions(pattern.blocks);
    int len = static_cast<int>(dirs.size());
    if (len + 1 > d.order())
        return std::nullopt;

    std::vector<int> seq;
    std::vector<char> used(d.order(), 0);
    std::function<bool(int)> dfs = [&](int pos) -> bool {
        if (pos == len)
            return true;
        int cur = seq.back();
        const auto& cands =
            dirs[pos] == Dir::forward ? d.out_neighbors(cur) : d.in_neighbors(cur);
        for (int w : cands) {
            if (used[w])
                continue;
            used[w] = 1;
            seq.push_back(w);
            if (dfs(pos + 1))
                return true;
            seq.pop_back();
            used[w] = 0;
        }
        return false;
    };
    for (int v0 = 0; v0 < d.order(); ++v0) {
        used.assign(d.order(), 0);
        used[v0] = 1;
        seq.assign(1, v0);
        if (dfs(0))
            return PathEmbedding{seq, pattern.blocks};
    }
    return std::nullopt;
}

std::optional<PathEmbedding> find_p4(const Digraph& d) {
    return find_pattern(d, BlockPattern::p4());
}

namespace {

// State of the certified two-block search over one digraph. Circuits found
// along the way are deleted from the live vertex set; their data is kept for
// the final extraction checks and the coloring assembly.
struct Certifier {
    const Digraph& d;
    int k, l;
    std::vector<char> alive;
    OutForest forest;

    struct RemovedCircuit {
        std::vector<int> cyc;  // cyclic order, arcs cyc[i] -> cyc[i+1 mod len]
        int anchor = -1;       // circuit vertex that had level k at removal time
        int hook = -1;         // forest parent of anchor (level k-1); -1 when k == 1
        std::vector<int> color_by_host; // proper coloring of d[cyc], values 1..l+1
    };
    std::vector<RemovedCircuit> circuits;
    std::vector<int> circuit_of; // host vertex -> circuit index or -1
    std::vector<int> pos_in_cyc; // host vertex -> position in its circuit

    Certifier(const Digraph& dd, int kk, int ll)
        : d(dd), k(kk), l(ll), alive(dd.order(), 1),
          forest(maximal_closure_restricted(dd, std::vector<char>(dd.order(), 1), nullptr)),
          circuit_of(dd.order(), -1), pos_in_cyc(dd.order(), -1) {}

    int canon_color(int level) const {
        return level < k ? level : k + (level - k) % (l + 1);
    }

    PathEmbedding validated(PathEmbedding e) const {
        if (!check_embedding(d, e) ||
            e.blocks != std::vector<Block>{{Dir::forward, k}, {Dir::backward, l}})
            throw internal_inconsistency("extracted path failed validation");
        return e;
    }

    // --- circuit walk helpers ----------------------------------------

    int cyc_next(const RemovedCircuit& c, int v) const {
        int p = pos_in_cyc[v];
        return c.cyc[(p + 1) % c.cyc.size()];
    }

    int cyc_prev(const RemovedCircuit& c, int v) const {
        int p = pos_in_cyc[v];
        int len = static_cast<int>(c.cyc.size());
        return c.cyc[(p - 1 + len) % len];
    }

    // steps backward along the circuit starting at v: [v, prev(v), ...]
    std::vector<int> cyc_back_walk(const RemovedCircuit& c, int v, int count) const {
        std::vector<int> r{v};
        for (int i = 0; i < count; ++i) {
            v = cyc_prev(c, v);
            r.push_back(v);
        }
        return r;
    }

    // --- extraction builders ------------------------------------------
    // Each returns a P(k,l): k forward arcs, apex, l backward arcs.

    // forward: forest path suffix ending at `end` (level >= k), then end->z
    // into circuit z; backward: l steps against the circuit.
    PathEmbedding extract_into_circuit(int end, int z, const RemovedCircuit& c) const {
        std::vector<int> path = forest.path_to(end);
        PathEmbedding e;
        for (int t = static_cast<int>(path.size()) - k; t < static_cast<int>(path.size()); ++t)
            e.vertices.push_back(path[t]);
        auto bwd = cyc_back_walk(c, z, l);
        e.vertices.insert(e.vertices.end(), bwd.begin(), bwd.end());
        e.blocks = {{Dir::forward, k}, {Dir::backward, l}};
        return validated(e);
    }

    // arc z->y leaving circuit c toward a forest vertex of level >= k+1:
    // build the reversed shape (l forward, k backward) and flip it.
    PathEmbedding extract_out_of_circuit(const RemovedCircuit& c, int z, int y) const {
        PathEmbedding e;
        auto fwd = cyc_back_walk(c, z, l - 1); // [z, prev, ...]; reversed below
        std::reverse(fwd.begin(), fwd.end());
        e.vertices = fwd;
        e.vertices.push_back(y);
        std::vector<int> path = forest.path_to(y);
        for (int t = static_cast<int>(path.size()) - 2;
             t >= static_cast<int>(path.size()) - 1 - k; --t)
            e.vertices.push_back(path[t]);
        e.blocks = {{Dir::forward, l}, {Dir::backward, k}};
        if (!check_embedding(d, e))
            throw internal_inconsistency("extracted path failed validation");
        return validated(reverse_embedding(e));
    }

    // arc x->y between two removed circuits.
    PathEmbedding extract_between_circuits(const RemovedCircuit& ci, int x,
                                           const RemovedCircuit& cj, int y) const {
        auto fwd = cyc_back_walk(ci, x, k - 1); // [x, prev, ...]
        std::reverse(fwd.begin(), fwd.end());
        PathEmbedding e;
        e.vertices = fwd;
        auto bwd = cyc_back_walk(cj, y, l);
        e.vertices.insert(e.vertices.end(), bwd.begin(), bwd.end());
        e.blocks = {{Dir::forward, k}, {Dir::backward, l}};
        return validated(e);
    }

    // circuit without a level-k vertex: forest path to its first contact
    // vertex, then l steps against the circuit.
    PathEmbedding extract_circuit_off_level_k(const std::vector<int>& cyc,
                                              const std::vector<int>& pos) const {
        std::vector<int> path = forest.path_to(cyc[0]);
        int t = 0;
        while (pos[path[t]] == -1)
            ++t;
        PathEmbedding e;
        for (int i = t - k; i <= t; ++i)
            e.vertices.push_back(path[i]);
        int len = static_cast<int>(cyc.size());
        int p = pos[path[t]];
        for (int i = 1; i <= l; ++i)
            e.vertices.push_back(cyc[(p - i + len * l) % len]);
        e.blocks = {{Dir::forward, k}, {Dir::backward, l}};
        return validated(e);
    }

    // hook vertex rose above level k-1: forest path to the hook, the old
    // forest arc into the circuit, then l steps against the circuit.
    PathEmbedding extract_via_hook(const RemovedCircuit& c) const {
        std::vector<int> path = forest.path_to(c.hook);
        PathEmbedding e;
        for (int t = static_cast<int>(path.size()) - k; t < static_cast<int>(path.size()); ++t)
            e.vertices.push_back(path[t]);
        auto bwd = cyc_back_walk(c, c.anchor, l);
        e.vertices.insert(e.vertices.end(), bwd.begin(), bwd.end());
        e.blocks = {{Dir::forward, k}, {Dir::backward, l}};
        return validated(e);
    }

    // bad vertex with in-neighbors in two circuits.
    PathEmbedding extract_two_circuit_bad(int b, const RemovedCircuit& ci, int x,
                                          const RemovedCircuit& cj, int x2) const {
        auto fwd = cyc_back_walk(ci, x, k - 1);
        std::reverse(fwd.begin(), fwd.end());
        PathEmbedding e;
        e.vertices = fwd;
        e.vertices.push_back(b);
        auto bwd = cyc_back_walk(cj, x2, l - 1);
        e.vertices.insert(e.vertices.end(), bwd.begin(), bwd.end());
        e.blocks = {{Dir::forward, k}, {Dir::backward, l}};
        return validated(e);
    }

    // bad vertex with more than l in-neighbors in one circuit: pick a pair
    // of in-neighbors (forward entry, backward anchor) whose segments do not
    // collide; at least one pair works.
    PathEmbedding extract_crowded_bad(int b, const RemovedCircuit& c,
                                      const std::vector<int>& ins) const {
        std::vector<int> chain; // ... hook, anchor, circuit segment
        if (k >= 2) {
            chain = forest.path_to(c.hook);
            chain.push_back(c.anchor);
        } else {
            chain.push_back(c.anchor);
        }
        for (int x : ins) {
            std::vector<int> fullchain = chain;
            if (x != c.anchor) {
                int cur = c.anchor;
                while (true) {
                    cur = cyc_next(c, cur);
                    fullchain.push_back(cur);
                    if (cur == x)
                        break;
                }
            }
            if (static_cast<int>(fullchain.size()) < k)
                continue;
            for (int w : ins) {
                if (w == x)
                    continue;
                PathEmbedding e;
                for (int t = static_cast<int>(fullchain.size()) - k;
                     t < static_cast<int>(fullchain.size()); ++t)
                    e.vertices.push_back(fullchain[t]);
                e.vertices.push_back(b);
                auto bwd = cyc_back_walk(c, w, l - 1);
                e.vertices.insert(e.vertices.end(), bwd.begin(), bwd.end());
                e.blocks = {{Dir::forward, k}, {Dir::backward, l}};
                if (check_embedding(d, e))
                    return e;
            }
        }
        throw internal_inconsistency("no valid assembly for an overcrowded bad vertex");
    }

    // arc x->y entering the descendant set of bad vertex b at y != b.
    PathEmbedding extract_entering(int x, int y, int b, const RemovedCircuit& c, int vin) const {
        std::vector<int> path = forest.path_to(x);
        PathEmbedding e;
        for (int t = static_cast<int>(path.size()) - k; t < static_cast<int>(path.size()); ++t)
            e.vertices.push_back(path[t]);
        e.vertices.push_back(y);
        std::vector<int> down; // y's ancestors up to b, then into the circuit
        for (int cur = forest.parent(y); cur != -1; cur = forest.parent(cur)) {
            down.push_back(cur);
            if (cur == b)
                break;
        }
        auto cw = cyc_back_walk(c, vin, l);
        down.insert(down.end(), cw.begin(), cw.end());
        for (int i = 0; i < l; ++i)
            e.vertices.push_back(down[i]);
        e.blocks = {{Dir::forward, k}, {Dir::backward, l}};
        return validated(e);
    }

    // arc x->y leaving the descendant set of bad vertex b.
    PathEmbedding extract_leaving(int x, int y, int b, const RemovedCircuit& c, int vin) const {
        std::vector<int> path = forest.path_to(y);
        PathEmbedding e;
        for (int t = static_cast<int>(path.size()) - k - 1; t < static_cast<int>(path.size());
             ++t)
            e.vertices.push_back(path[t]);
        std::vector<int> down{x};
        if (x != b)
            for (int cur = forest.parent(x); cur != -1; cur = forest.parent(cur)) {
                down.push_back(cur);
                if (cur == b)
                    break;
            }
        auto cw = cyc_back_walk(c, vin, l);
        down.insert(down.end(), cw.begin(), cw.end());
        for (int i = 0; i < l; ++i)
            e.vertices.push_back(down[i]);
        e.blocks = {{Dir::forward, k}, {Dir::backward, l}};
        return validated(e);
    }

    // --- main loop -----------------------------------------------------

    CertifiedOutcome run() {
        while (true) {
            auto violation = first_violation();
            if (!violation)
                break;
            auto [v, w] = *violation;
            int lv = forest.level(v), lw = forest.level(w);
            if (lv == lw)
                throw internal_inconsistency("arc inside a level of a maximal forest");
            if (lv < lw)
                return {level_gap_path(forest, {v, w}, k, l), std::nullopt};
            if (lw > k)
                return {level_gap_path(forest, {v, w}, k, l), std::nullopt};
            // lw == k, lv >= k+l+1: the forest path from w to v plus (v,w)
            // closes a circuit of length at least l+2
            if (auto emb = remove_good_circuit(v, w))
                return {*emb, std::nullopt};
        }
        return final_checks_and_assembly();
    }

    std::optional<Arc> first_violation() const {
        for (auto [x, y] : d.arcs()) {
            if (!alive[x] || !alive[y])
                continue;
            if (canon_color(forest.level(x)) == canon_color(forest.level(y)))
                return Arc{x, y};
        }
        return std::nullopt;
    }

    // Carve an (l+1)-good circuit out of the forest cycle, delete it, close
    // the forest again, and re-check hook levels. Returns an embedding when
    // a check fires.
    std::optional<PathEmbedding> remove_good_circuit(int v, int w) {
        if (!forest.is_forest_ancestor(w, v))
            throw internal_inconsistency("maximal forest misses the path from w to v");
        std::vector<int> path = forest.path_to(v);
        std::vector<int> cyc(path.begin() + (forest.level(w) - 1), path.end());

        InducedResult ind = induced(d, cyc);
        ChromaticResult chi_c = chromatic_number(ind.graph);
        std::vector<int> chosen;
        if (chi_c.chi <= l + 1) {
            chosen = cyc;
        } else {
            Circuit reduced = k_good_circuit(ind.graph, l + 1);
            for (int x : reduced.vertices)
                chosen.push_back(ind.to_host[x]);
        }

        RemovedCircuit rc;
        rc.cyc = chosen;
        rc.color_by_host.assign(d.order(), 0);
        {
            InducedResult ind2 = induced(d, chosen);
            ChromaticResult chi2 = chromatic_number(ind2.graph);
            if (chi2.chi > l + 1)
                throw internal_inconsistency("selected circuit is not (l+1)-good");
            for (int x = 0; x < ind2.graph.order(); ++x)
                rc.color_by_host[ind2.to_host[x]] = chi2.witness.color[x];
        }

        // positions; chosen preserves the forest-path order, so consecutive
        // entries are arcs and the last one closes to the first via (v,w)
        // only when chosen == cyc. After a reduction the cyclic order is the
        // reduced circuit's own order.
        std::vector<int> pos(d.order(), -1);
        for (std::size_t i = 0; i < rc.cyc.size(); ++i)
            pos[rc.cyc[i]] = static_cast<int>(i);

        int anchor = -1;
        for (int x : rc.cyc)
            if (forest.level(x) == k)
                anchor = x;
        if (anchor == -1)
            return extract_circuit_off_level_k(rc.cyc, pos);
        rc.anchor = anchor;
        rc.hook = k >= 2 ? forest.parent(anchor) : -1;

        int idx = static_cast<int>(circuits.size());
        circuits.push_back(rc);
        for (std::size_t i = 0; i < rc.cyc.size(); ++i) {
            circuit_of[rc.cyc[i]] = idx;
            pos_in_cyc[rc.cyc[i]] = static_cast<int>(i);
            alive[rc.cyc[i]] = 0;
        }
        forest = maximal_closure_restricted(d, alive, &forest);

        if (k >= 2)
            for (const auto& c : circuits) {
                int hl = forest.level(c.hook);
                if (hl > k - 1)
                    return extract_via_hook(c);
                if (hl < k - 1)
                    throw internal_inconsistency("hook vertex sank below level k-1");
            }
        return std::nullopt;
    }

    CertifiedOutcome final_checks_and_assembly() {
        // arcs between distinct circuits
        for (auto [x, y] : d.arcs()) {
            int cx = circuit_of[x], cy = circuit_of[y];
            if (cx != -1 && cy != -1 && cx != cy)
                return {extract_between_circuits(circuits[cx], x, circuits[cy], y),
                        std::nullopt};
        }
        // circuit neighbors in the final forest
        for (auto [x, y] : d.arcs()) {
            if (alive[x] && circuit_of[y] != -1 && forest.level(x) >= k)
                return {extract_into_circuit(x, y, circuits[circuit_of[y]]), std::nullopt};
            if (circuit_of[x] != -1 && alive[y] && forest.level(y) >= k + 1)
                return {extract_out_of_circuit(circuits[circuit_of[x]], x, y), std::nullopt};
        }
        // bad vertices: level-k out-neighbors of the removed circuits
        std::vector<std::vector<int>> bad_ins(d.order()); // circuit in-neighbors per bad vertex
        std::vector<int> bad_circuit(d.order(), -1);
        std::vector<int> bad_list;
        for (int ci = 0; ci < static_cast<int>(circuits.size()); ++ci) {
            const auto& c = circuits[ci];
            // walk the cyclic order starting after the anchor so the crowded
            // case can anchor its segments deterministically
            int len = static_cast<int>(c.cyc.size());
            int start = pos_in_cyc[c.anchor];
            for (int s = 1; s <= len; ++s) {
                int z = c.cyc[(start + s) % len];
                for (int b : d.out_neighbors(z)) {
                    if (!alive[b] || forest.level(b) != k)
                        continue;
                    if (bad_circuit[b] == -1) {
                        bad_circuit[b] = ci;
                        bad_list.push_back(b);
                    }
                    if (bad_circuit[b] != ci)
                        return {extract_two_circuit_bad(b, circuits[bad_circuit[b]],
                                                        bad_ins[b][0], c, z),
                                std::nullopt};
                    bad_ins[b].push_back(z);
                }
            }
        }
        std::sort(bad_list.begin(), bad_list.end());
        for (int b : bad_list)
            if (static_cast<int>(bad_ins[b].size()) > l)
                return {extract_crowded_bad(b, circuits[bad_circuit[b]], bad_ins[b]),
                        std::nullopt};

        // descendant sets of bad vertices
        std::vector<int> owner(d.order(), -1); // alive vertex -> bad root
        for (int b : bad_list)
            for (int x : forest.descendants(b))
                owner[x] = b;
        for (auto [x, y] : d.arcs()) {
            if (!alive[x] || !alive[y])
                continue;
            if (owner[y] != -1 && owner[x] != owner[y] && forest.level(x) >= k) {
                int b = owner[y];
                if (y == b)
                    throw internal_inconsistency("forest arc into a bad vertex from level >= k");
                return {extract_entering(x, y, b, circuits[bad_circuit[b]], bad_ins[b][0]),
                        std::nullopt};
            }
            if (owner[x] != -1 && owner[x] != owner[y] && forest.level(y) >= k) {
                int b = owner[x];
                if (forest.level(y) <= forest.level(x))
                    throw internal_inconsistency("arc out of a descendant set breaks maximality");
                return {extract_leaving(x, y, b, circuits[bad_circuit[b]], bad_ins[b][0]),
                        std::nullopt};
            }
        }

        // assembly: canonical colors outside, circuit witnesses shifted into
        // {k..k+l}, descendant sets shifted by their root's color
        VertexColoring col;
        col.k = k + l;
        col.color.assign(d.order(), 0);
        for (int v = 0; v < d.order(); ++v) {
            if (alive[v] && owner[v] == -1)
                col.color[v] = canon_color(forest.level(v));
            else if (circuit_of[v] != -1)
                col.color[v] = k - 1 + circuits[circuit_of[v]].color_by_host[v];
        }
        for (int b : bad_list) {
            std::vector<char> taken(k + l + 1, 0);
            for (int z : bad_ins[b])
                taken[k - 1 + circuits[bad_circuit[b]].color_by_host[z]] = 1;
            int cb = k;
            while (taken[cb])
                ++cb;
            for (int x : forest.descendants(b))
                col.color[x] = k + (cb - k + forest.level(x) - k) % (l + 1);
        }
        for (int v = 0; v < d.order(); ++v)
            if (col.color[v] < 1 || col.color[v] > col.k)
                throw internal_inconsistency("assembled coloring left a vertex uncolored");
        if (!is_proper(d, col))
            throw internal_inconsistency("assembled coloring is not proper");
        return {std::nullopt, col};
    }
};

} // namespace

CertifiedOutcome find_two_block_certified(const Digraph& d, int k, int l) {
    if (k < 1 || l < 1)
        throw precondition_error("find_two_block_certified: block lengths must be at least 1");
    if (k + l < 3)
        throw precondition_error("find_two_block_certified: k+l must be at least 3");

    bool swapped = k > l;
    Certifier cert(d, std::min(k, l), std::max(k, l));
    CertifiedOutcome out = cert.run();
    if (out.embedding && swapped)
        out.embedding = reverse_embedding(*out.embedding);
    if (out.embedding) {
        if (!check_embedding(d, *out.embedding) ||
            out.embedding->blocks !=
                std::vector<Block>{{Dir::forward, k}, {Dir::backward, l}})
            throw internal_inconsistency("two-block certificate failed validation");
    } else {
        if (!out.coloring || out.coloring->k != k + l || !is_proper(d, *out.coloring))
            throw internal_inconsistency("coloring certificate failed validation");
    }
    return out;
}

} // namespace chromapath
