#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "blockforest/errors.hpp"

namespace blockforest {

// Hard cap on vertices for the brute-force layer; bitmask-backed adjacency.
inline constexpr int kMaxVertices = 12;

// Simple graph on vertices 0..n-1 (no loops, no multi-edges).
struct LabeledGraph {
    int n = 0;
    std::array<uint16_t, kMaxVertices> adj{};

    LabeledGraph() = default;
    explicit LabeledGraph(int vertices) : n(vertices) {
        if (n < 0 || n > kMaxVertices)
            throw domain_error("vertex count out of range");
    }

    void add_edge(int u, int v) {
        adj[u] |= static_cast<uint16_t>(1u << v);
        adj[v] |= static_cast<uint16_t>(1u << u);
    }
    void remove_edge(int u, int v) {
        adj[u] &= static_cast<uint16_t>(~(1u << v));
        adj[v] &= static_cast<uint16_t>(~(1u << u));
    }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }

    int degree(int v) const { return __builtin_popcount(adj[v]); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n; ++v) total += degree(v);
        return total / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has_edge(u, v)) e.emplace_back(u, v);
        return e;
    }

    bool operator==(const LabeledGraph& other) const {
        if (n != other.n) return false;
        for (int v = 0; v < n; ++v)
            if (adj[v] != other.adj[v]) return false;
        return true;
    }
};

// Directed graph on vertices 0..n-1; arc u->v as bit v of out[u].
struct Digraph {
    int n = 0;
    std::array<uint16_t, kMaxVertices> out{};

    Digraph() = default;
    explicit Digraph(int vertices) : n(vertices) {
        if (n < 0 || n > kMaxVertices)
            throw domain_error("vertex count out of range");
    }

    void add_arc(int u, int v) { out[u] |= static_cast<uint16_t>(1u << v); }
    bool has_arc(int u, int v) const { return (out[u] >> v) & 1u; }

    LabeledGraph underlying() const {
        LabeledGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && (has_arc(u, v) || has_arc(v, u))) g.add_edge(u, v);
        return g;
    }
};

bool is_connected(const LabeledGraph& g);

// A block with its vertex set (ascending) and its edges.
struct Block {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
    int size() const { return static_cast<int>(vertices.size()); }
};

// Blocks are the maximal 2-connected subgraphs plus bridge edges; they
// partition the edge set. Cutpoints are exactly the vertices lying in
// two or more blocks. tree_edges lists (block index, cutpoint) incidences
// of the block-cutpoint tree.
struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<int> cutpoints;
    std::vector<std::pair<int, int>> tree_edges;
};

// Biconnected components of a connected graph (throws on disconnected
// input). A single vertex decomposes into zero blocks.
BlockDecomposition block_decompose(const LabeledGraph& g);

struct SpeciesFlags {
    bool husimi = false;     // every block a complete graph
    bool cactus = false;     // every block an edge or a cycle
    bool triangular = false; // every block a triangle
    bool tree = false;       // every block an edge
};

// Block-by-block classification of a connected graph. The single vertex
// satisfies every family vacuously.
SpeciesFlags classify(const LabeledGraph& g);
SpeciesFlags classify(const BlockDecomposition& dec, const LabeledGraph& g);

// Connected digraph all of whose blocks are directed cycles (2-cycles are
// the pairs with both arcs).
bool is_oriented_cactus(const Digraph& d);

// Multiset of block sizes as counts[i] = number of blocks of size i+2,
// trailing-trimmed; shared with BlockSizeDistribution in labeled.hpp.
std::vector<int> block_size_counts(const BlockDecomposition& dec);

} // namespace blockforest
