#include "chromapath/digraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace chromapath {

Digraph::Digraph(int n, bool oriented) : n_(n), oriented_(oriented), out_(n), in_(n) {
    if (n < 0)
        throw precondition_error("vertex count must be non-negative");
}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw precondition_error("vertex " + std::to_string(v) + " out of range 0.." +
                                 std::to_string(n_ - 1));
}

void Digraph::add_arc(int tail, int head) {
    check_vertex(tail);
    check_vertex(head);
    if (tail == head)
        throw precondition_error("loop at vertex " + std::to_string(tail));
    if (has_arc(tail, head))
        throw precondition_error("duplicate arc " + std::to_string(tail) + "->" +
                                 std::to_string(head));
    if (oriented_ && has_arc(head, tail))
        throw precondition_error("digon " + std::to_string(tail) + "->" + std::to_string(head) +
                                 " in oriented digraph");
    auto& o = out_[tail];
    o.insert(std::lower_bound(o.begin(), o.end(), head), head);
    auto& i = in_[head];
    i.insert(std::lower_bound(i.begin(), i.end(), tail), tail);
    ++m_;
}

bool Digraph::has_arc(int tail, int head) const {
    if (tail < 0 || tail >= n_ || head < 0 || head >= n_)
        return false;
    const auto& o = out_[tail];
    return std::binary_search(o.begin(), o.end(), head);
}

bool Digraph::adjacent(int u, int v) const {
    return has_arc(u, v) || has_arc(v, u);
}

std::vector<int> Digraph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> r = out_[v];
    r.insert(r.end(), in_[v].begin(), in_[v].end());
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

int Digraph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

int Digraph::max_out_degree() const {
    int r = 0;
    for (int v = 0; v < n_; ++v)
        r = std::max(r, out_degree(v));
    return r;
}

int Digraph::min_out_degree() const {
    int r = n_ == 0 ? 0 : out_degree(0);
    for (int v = 1; v < n_; ++v)
        r = std::min(r, out_degree(v));
    return r;
}

int Digraph::max_in_degree() const {
    int r = 0;
    for (int v = 0; v < n_; ++v)
        r = std::max(r, in_degree(v));
    return r;
}

int Digraph::min_in_degree() const {
    int r = n_ == 0 ? 0 : in_degree(0);
    for (int v = 1; v < n_; ++v)
        r = std::min(r, in_degree(v));
    return r;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> r;
    r.reserve(m_);
    for (int v = 0; v < n_; ++v)
        for (int w : out_[v])
            r.emplace_back(v, w);
    return r;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t)
        toks.push_back(t);
    return toks;
}

bool parse_int(const std::string& tok, int& value) {
    if (tok.empty())
        return false;
    std::size_t pos = 0;
    try {
        long v = std::stol(tok, &pos);
        if (pos != tok.size() || v < -1000000000 || v > 1000000000)
            return false;
        value = static_cast<int>(v);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

Digraph parse_arclist(std::string_view text) {
    std::vector<std::pair<int, std::string>> lines; // (1-based line no, content)
    {
        int no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            std::string line(text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                              : end - start));
            ++no;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (!line.empty() && line[0] != '#' && !split_ws(line).empty())
                lines.emplace_back(no, line);
            if (end == std::string_view::npos)
                break;
            start = end + 1;
        }
    }
    if (lines.empty())
        throw parse_error(1, "missing header line \"<n> <m>\"");

    auto [hline, header] = lines[0];
    auto toks = split_ws(header);
    bool multi = false;
    if (toks.size() == 3 && toks[2] == "multi")
        multi = true;
    else if (toks.size() != 2)
        throw parse_error(hline, "header must be \"<n> <m>\" or \"<n> <m> multi\"");
    int n = 0, m = 0;
    if (!parse_int(toks[0], n) || !parse_int(toks[1], m))
        throw parse_error(hline, "header must contain two integers");
    if (n <= 0)
        throw parse_error(hline, "vertex count must be positive");
    if (m < 0)
        throw parse_error(hline, "arc count must be non-negative");
    if (static_cast<int>(lines.size()) - 1 < m)
        throw parse_error(lines.back().first, "expected " + std::to_string(m) + " arc lines, got " +
                                                  std::to_string(lines.size() - 1));
    if (static_cast<int>(lines.size()) - 1 > m)
        throw parse_error(lines[m + 1].first, "unexpected extra line after " + std::to_string(m) +
                                                  " arcs");

    Digraph d(n, !multi);
    for (int i = 1; i <= m; ++i) {
        auto [lno, line] = lines[i];
        auto at = split_ws(line);
        int tail = 0, head = 0;
        if (at.size() != 2 || !parse_int(at[0], tail) || !parse_int(at[1], head))
            throw parse_error(lno, "arc line must be \"<tail> <head>\"");
        try {
            d.add_arc(tail, head);
        } catch (const precondition_error& e) {
            throw parse_error(lno, e.what());
        }
    }
    return d;
}

std::string format_arclist(const Digraph& d) {
    std::string s = std::to_string(d.order()) + " " + std::to_string(d.arc_count());
    if (!d.oriented())
        s += " multi";
    s += "\n";
    for (auto [u, v] : d.arcs())
        s += std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
}

std::string to_dot(const Digraph& d) {
    std::string s = "digraph G {\n";
    for (auto [u, v] : d.arcs())
        s += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
    s += "}\n";
    return s;
}

InducedResult induced(const Digraph& d, const std::vector<int>& s) {
    std::vector<int> keep(s);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int v : keep)
        if (v < 0 || v >= d.order())
            throw precondition_error("induced: vertex " + std::to_string(v) + " out of range");

    std::vector<int> to_new(d.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        to_new[keep[i]] = static_cast<int>(i);

    Digraph g(static_cast<int>(keep.size()), d.oriented());
    for (auto [u, v] : d.arcs())
        if (to_new[u] >= 0 && to_new[v] >= 0)
            g.add_arc(to_new[u], to_new[v]);
    return {std::move(g), std::move(keep)};
}

ContractResult contract(const Digraph& d, const std::vector<int>& h, ContractMode mode) {
    std::vector<int> hs(h);
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    if (hs.empty())
        throw precondition_error("contract: empty vertex set");
    for (int v : hs)
        if (v < 0 || v >= d.order())
            throw precondition_error("contract: vertex " + std::to_string(v) + " out of range");

    std::vector<char> in_h(d.order(), 0);
    for (int v : hs)
        in_h[v] = 1;

    if (mode == ContractMode::digraph) {
        for (int v = 0; v < d.order(); ++v) {
            if (in_h[v])
                continue;
            bool to_h = false, from_h = false;
            for (int w : d.out_neighbors(v))
                if (in_h[w])
                    to_h = true;
            for (int w : d.in_neighbors(v))
                if (in_h[w])
                    from_h = true;
            if (to_h && from_h)
                throw precondition_error("contract: vertex " + std::to_string(v) +
                                         " has arcs to and from the contracted set");
        }
    }

    std::vector<int> to_new(d.order(), -1);
    std::vector<int> to_host;
    for (int v = 0; v < d.order(); ++v) {
        if (!in_h[v]) {
            to_new[v] = static_cast<int>(to_host.size());
            to_host.push_back(v);
        }
    }
    int merged = static_cast<int>(to_host.size());
    to_host.push_back(-1);

    Digraph g(merged + 1, false);
    std::set<Arc> seen;
    for (auto [u, v] : d.arcs()) {
        int nu = in_h[u] ? merged : to_new[u];
        int nv = in_h[v] ? merged : to_new[v];
        if (nu == nv)
            continue; // internal arc of H, dropped
        if (seen.insert({nu, nv}).second)
            g.add_arc(nu, nv);
    }
    return {std::move(g), std::move(to_host), merged};
}

bool is_tournament(const Digraph& d) {
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v) {
            int c = (d.has_arc(u, v) ? 1 : 0) + (d.has_arc(v, u) ? 1 : 0);
            if (c != 1)
                return false;
        }
    return true;
}

namespace {

// Ordered-partition refinement with individualization. The canonical form is
// the lexicographically smallest adjacency matrix over the discrete leaves.
struct Canonizer {
    int n;
    std::vector<char> adj; // adj[u * n + v] = 1 iff arc u->v

    explicit Canonizer(const Digraph& d) : n(d.order()), adj(d.order() * d.order(), 0) {
        for (auto [u, v] : d.arcs())
            adj[u * n + v] = 1;
    }

    using Partition = std::vector<std::vector<int>>;

    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            Partition next;
            for (const auto& cell : p) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                // key: per existing cell, (#out-neighbors, #in-neighbors)
                std::map<std::vector<int>, std::vector<int>> buckets;
                for (int v : cell) {
                    std::vector<int> key;
                    key.reserve(p.size() * 2);
                    for (const auto& other : p) {
                        int o = 0, i = 0;
                        for (int w : other) {
                            o += adj[v * n + w];
                            i += adj[w * n + v];
                        }
                        key.push_back(o);
                        key.push_back(i);
                    }
                    buckets[key].push_back(v);
                }
                if (buckets.size() > 1)
                    changed = true;
                for (auto& [key, members] : buckets) {
                    std::sort(members.begin(), members.end());
                    next.push_back(members);
                }
            }
            p = std::move(next);
        }
    }

    std::string matrix_string(const std::vector<int>& perm) const {
        std::string s(static_cast<std::size_t>(n) * n, '0');
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (adj[perm[i] * n + perm[j]])
                    s[i * n + j] = '1';
        return s;
    }

    void search(Partition p, std::string& best) const {
        refine(p);
        std::size_t split = p.size();
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i].size() > 1) {
                split = i;
                break;
            }
        if (split == p.size()) {
            std::vector<int> perm;
            perm.reserve(n);
            for (const auto& cell : p)
                perm.push_back(cell[0]);
            std::string s = matrix_string(perm);
            if (best.empty() || s < best)
                best = std::move(s);
            return;
        }
        for (int v : p[split]) {
            Partition q;
            q.reserve(p.size() + 1);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (i != split) {
                    q.push_back(p[i]);
                    continue;
                }
                q.push_back({v});
                std::vector<int> rest;
                for (int w : p[i])
                    if (w != v)
                        rest.push_back(w);
                q.push_back(std::move(rest));
            }
            search(std::move(q), best);
        }
    }
};

} // namespace

std::string canonical_form(const Digraph& d) {
    if (d.order() == 0)
        return "0;";
    Canonizer c(d);
    std::vector<int> all(d.order());
    for (int v = 0; v < d.order(); ++v)
        all[v] = v;
    std::string best;
    c.search({all}, best);
    return std::to_string(d.order()) + ";" + best;
}

} // namespace chromapath
