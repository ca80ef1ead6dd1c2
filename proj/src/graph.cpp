#include "blockforest/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace blockforest {

bool is_connected(const LabeledGraph& g) {
    if (g.n == 0) return false;
    uint16_t seen = 1u;
    uint16_t frontier = 1u;
    while (frontier) {
        uint16_t next = 0;
        for (int v = 0; v < g.n; ++v)
            if ((frontier >> v) & 1u) next |= g.adj[v];
        frontier = next & static_cast<uint16_t>(~seen);
        seen |= next;
    }
    return seen == static_cast<uint16_t>((1u << g.n) - 1u);
}

BlockDecomposition block_decompose(const LabeledGraph& g) {
    if (!is_connected(g)) throw domain_error("block decomposition requires a connected graph");

    BlockDecomposition dec;
    if (g.n == 1) return dec;

    std::array<int, kMaxVertices> disc{}, low{}, parent{};
    disc.fill(-1);
    parent.fill(-1);
    int timer = 0;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> block_edges;

    std::function<void(int)> dfs = [&](int u) {
        disc[u] = low[u] = timer++;
        for (int v = 0; v < g.n; ++v) {
            if (!g.has_edge(u, v)) continue;
            if (disc[v] == -1) {
                parent[v] = u;
                edge_stack.emplace_back(u, v);
                dfs(v);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    // u closes a block; pop its edges.
                    std::vector<std::pair<int, int>> edges;
                    while (true) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        edges.push_back(e);
                        if (e.first == u && e.second == v) break;
                    }
                    block_edges.push_back(std::move(edges));
                }
            } else if (v != parent[u] && disc[v] < disc[u]) {
                edge_stack.push_back({u, v});
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    dfs(0);

    std::array<int, kMaxVertices> block_count{};
    for (auto& edges : block_edges) {
        Block b;
        std::set<int> verts;
        for (auto& [u, v] : edges) {
            verts.insert(u);
            verts.insert(v);
        }
        b.vertices.assign(verts.begin(), verts.end());
        for (auto& [u, v] : edges)
            b.edges.emplace_back(std::min(u, v), std::max(u, v));
        std::sort(b.edges.begin(), b.edges.end());
        for (int v : b.vertices) ++block_count[v];
        dec.blocks.push_back(std::move(b));
    }
    for (int v = 0; v < g.n; ++v)
        if (block_count[v] >= 2) dec.cutpoints.push_back(v);
    for (size_t i = 0; i < dec.blocks.size(); ++i)
        for (int v : dec.blocks[i].vertices)
            if (block_count[v] >= 2) dec.tree_edges.emplace_back(static_cast<int>(i), v);
    return dec;
}

namespace {

bool block_is_complete(const Block& b) {
    const int m = b.size();
    return static_cast<int>(b.edges.size()) == m * (m - 1) / 2;
}

bool block_is_cycle(const Block& b, const LabeledGraph& g) {
    const int m = b.size();
    if (m == 2) return b.edges.size() == 1;
    if (static_cast<int>(b.edges.size()) != m) return false;
    uint16_t mask = 0;
    for (int v : b.vertices) mask |= static_cast<uint16_t>(1u << v);
    for (int v : b.vertices)
        if (__builtin_popcount(g.adj[v] & mask) != 2) return false;
    return true;
}

} // namespace

SpeciesFlags classify(const BlockDecomposition& dec, const LabeledGraph& g) {
    SpeciesFlags f{true, true, true, true};
    for (const Block& b : dec.blocks) {
        const bool complete = block_is_complete(b);
        const bool cycle = block_is_cycle(b, g);
        f.husimi = f.husimi && complete;
        f.cactus = f.cactus && cycle;
        f.triangular = f.triangular && (b.size() == 3 && complete);
        f.tree = f.tree && b.size() == 2;
    }
    return f;
}

SpeciesFlags classify(const LabeledGraph& g) {
    return classify(block_decompose(g), g);
}

bool is_oriented_cactus(const Digraph& d) {
    for (int v = 0; v < d.n; ++v)
        if ((d.out[v] >> v) & 1u) return false; // no self-loops
    LabeledGraph g = d.underlying();
    if (!is_connected(g)) return false;
    BlockDecomposition dec = block_decompose(g);
    for (const Block& b : dec.blocks) {
        if (b.size() == 2) {
            int u = b.vertices[0], v = b.vertices[1];
            if (!(d.has_arc(u, v) && d.has_arc(v, u))) return false;
            continue;
        }
        if (!block_is_cycle(b, g)) return false;
        // Exactly one arc per edge, forming a single directed cycle.
        uint16_t mask = 0;
        for (int v : b.vertices) mask |= static_cast<uint16_t>(1u << v);
        for (auto [u, v] : b.edges)
            if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
        for (int v : b.vertices) {
            if (__builtin_popcount(d.out[v] & mask) != 1) return false;
            uint16_t in = 0;
            for (int u : b.vertices)
                if (d.has_arc(u, v)) in |= static_cast<uint16_t>(1u << u);
            if (__builtin_popcount(in) != 1) return false;
        }
    }
    return true;
}

std::vector<int> block_size_counts(const BlockDecomposition& dec) {
    std::vector<int> counts;
    for (const Block& b : dec.blocks) {
        const int idx = b.size() - 2;
        if (idx >= static_cast<int>(counts.size())) counts.resize(idx + 1, 0);
        ++counts[idx];
    }
    return counts;
}

} // namespace blockforest
