#include "chromapath/path_embedding.hpp"

#include <algorithm>

namespace chromapath {

int PathEmbedding::length() const {
    int r = 0;
    for (const auto& b : blocks)
        r += b.len;
    return r;
}

std::vector<Dir> arc_directions(const std::vector<Block>& blocks) {
    std::vector<Dir> dirs;
    for (const auto& b : blocks)
        for (int i = 0; i < b.len; ++i)
            dirs.push_back(b.dir);
    return dirs;
}

bool check_embedding(const Digraph& d, const PathEmbedding& e) {
    if (e.vertices.empty())
        return false;
    for (int v : e.vertices)
        if (v < 0 || v >= d.order())
            return false;
    std::vector<int> sorted = e.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (std::size_t i = 0; i < e.blocks.size(); ++i) {
        if (e.blocks[i].len < 1)
            return false;
        if (i > 0 && e.blocks[i].dir == e.blocks[i - 1].dir)
            return false;
    }
    auto dirs = arc_directions(e.blocks);
    if (dirs.size() + 1 != e.vertices.size())
        return false;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        int a = e.vertices[i], b = e.vertices[i + 1];
        bool ok = dirs[i] == Dir::forward ? d.has_arc(a, b) : d.has_arc(b, a);
        if (!ok)
            return false;
    }
    return true;
}

PathEmbedding reverse_embedding(const PathEmbedding& e) {
    PathEmbedding r;
    r.vertices.assign(e.vertices.rbegin(), e.vertices.rend());
    for (auto it = e.blocks.rbegin(); it != e.blocks.rend(); ++it)
        r.blocks.push_back({it->dir == Dir::forward ? Dir::backward : Dir::forward, it->len});
    return r;
}

std::string block_token(const Block& b) {
    return (b.dir == Dir::forward ? "f" : "b") + std::to_string(b.len);
}

std::string blocks_string(const std::vector<Block>& blocks) {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i)
            s += ",";
        s += block_token(blocks[i]);
    }
    return s;
}

} // namespace chromapath
