#include "blockforest/husimi_graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace blockforest {

HusimiGraph make_husimi(int n, std::vector<std::vector<int>> blocks) {
    HusimiGraph h;
    h.n = n;
    h.blocks = std::move(blocks);
    for (auto& b : h.blocks) std::sort(b.begin(), b.end());
    std::sort(h.blocks.begin(), h.blocks.end());
    return h;
}

LabeledGraph husimi_to_graph(const HusimiGraph& h) {
    LabeledGraph g(h.n);
    for (const auto& b : h.blocks)
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j)
                g.add_edge(b[i] - 1, b[j] - 1);
    return g;
}

void validate_husimi(const HusimiGraph& h) {
    if (h.n < 1) throw domain_error("husimi graph needs n >= 1");
    if (h.n == 1) {
        if (!h.blocks.empty())
            throw domain_error("single-vertex husimi graph cannot have blocks");
        return;
    }
    if (h.blocks.empty())
        throw domain_error("husimi graph on n >= 2 vertices needs blocks");
    std::set<int> covered;
    for (const auto& b : h.blocks) {
        if (b.size() < 2) throw domain_error("husimi block smaller than two vertices");
        std::set<int> seen;
        for (int v : b) {
            if (v < 1 || v > h.n)
                throw domain_error("husimi block vertex out of range 1..n");
            if (!seen.insert(v).second)
                throw domain_error("husimi block repeats a vertex");
        }
        covered.insert(b.begin(), b.end());
    }
    if (static_cast<int>(covered.size()) != h.n)
        throw domain_error("husimi blocks must cover every vertex of [n]");
    for (size_t i = 0; i < h.blocks.size(); ++i)
        for (size_t j = i + 1; j < h.blocks.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(h.blocks[i].begin(), h.blocks[i].end(),
                                  h.blocks[j].begin(), h.blocks[j].end(),
                                  std::back_inserter(common));
            if (common.size() > 1)
                throw domain_error("two husimi blocks share more than one vertex");
        }
    // The clique graph must be connected with exactly these blocks; this
    // also rules out cycles in the block-cutpoint structure.
    LabeledGraph g = husimi_to_graph(h);
    if (!is_connected(g)) throw domain_error("husimi blocks do not form a connected graph");
    BlockDecomposition dec = block_decompose(g);
    std::vector<std::vector<int>> found;
    for (const Block& b : dec.blocks) {
        std::vector<int> verts;
        for (int v : b.vertices) verts.push_back(v + 1);
        found.push_back(std::move(verts));
    }
    std::sort(found.begin(), found.end());
    std::vector<std::vector<int>> given = h.blocks;
    std::sort(given.begin(), given.end());
    if (found != given)
        throw domain_error("the given blocks are not the blocks of the graph they span");
}

HusimiGraph husimi_from_graph(const LabeledGraph& g) {
    if (g.n == 1) return HusimiGraph{1, {}};
    BlockDecomposition dec = block_decompose(g);
    std::vector<std::vector<int>> blocks;
    for (const Block& b : dec.blocks) {
        const int m = b.size();
        if (static_cast<int>(b.edges.size()) != m * (m - 1) / 2)
            throw domain_error("graph has a non-complete block; not a husimi graph");
        std::vector<int> verts;
        for (int v : b.vertices) verts.push_back(v + 1);
        blocks.push_back(std::move(verts));
    }
    return make_husimi(g.n, std::move(blocks));
}

std::string format_husimi(const HusimiGraph& h) {
    std::string out = std::to_string(h.n) + ";";
    for (size_t i = 0; i < h.blocks.size(); ++i) {
        out += i == 0 ? " {" : ",{";
        for (size_t j = 0; j < h.blocks[i].size(); ++j) {
            if (j) out += ",";
            out += std::to_string(h.blocks[i][j]);
        }
        out += "}";
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    int number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("expected a number at column " +
                                            std::to_string(start + 1));
        return std::stoi(s.substr(start, pos - start));
    }
};

} // namespace

HusimiGraph parse_husimi(const std::string& line) {
    Cursor c{line};
    const int n = c.number();
    if (!c.eat(';')) throw parse_error("expected ';' after the vertex count");
    std::vector<std::vector<int>> blocks;
    while (!c.done()) {
        if (!blocks.empty() && !c.eat(','))
            throw parse_error("expected ',' between blocks");
        if (!c.eat('{')) throw parse_error("expected '{' to open a block");
        std::vector<int> block;
        if (!c.eat('}')) {
            while (true) {
                block.push_back(c.number());
                if (c.eat('}')) break;
                if (!c.eat(',')) throw parse_error("expected ',' or '}' in a block");
            }
        }
        blocks.push_back(std::move(block));
    }
    return make_husimi(n, std::move(blocks));
}

} // namespace blockforest
