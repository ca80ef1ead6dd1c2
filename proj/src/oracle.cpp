#include "blockforest/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

namespace blockforest {

const char* species_name(Species s) {
    switch (s) {
        case Species::husimi: return "husimi";
        case Species::cactus: return "cacti";
        case Species::oriented_cactus: return "oriented";
        case Species::triangular_cactus: return "triangular";
    }
    return "?";
}

bool matches(const SpeciesFlags& f, Species s) {
    switch (s) {
        case Species::husimi: return f.husimi;
        case Species::cactus: return f.cactus;
        case Species::oriented_cactus: return f.cactus; // underlying graph
        case Species::triangular_cactus: return f.triangular;
    }
    return false;
}

int oracle_limit_from_env() {
    const char* env = std::getenv("BLOCKFOREST_ORACLE_LIMIT");
    if (env == nullptr || *env == '\0') return kDefaultOracleLimit;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1 || v > 11)
        throw parse_error("BLOCKFOREST_ORACLE_LIMIT must be an integer in 1..11");
    return static_cast<int>(v);
}

static void check_limit(int n, int oracle_limit, const char* what) {
    if (n < 1) throw domain_error(std::string(what) + ": n must be >= 1");
    if (oracle_limit > 11) oracle_limit = 11;
    if (n > oracle_limit)
        throw domain_error(std::string(what) + ": n=" + std::to_string(n) +
                           " exceeds the brute-force oracle limit " +
                           std::to_string(oracle_limit) +
                           " (raise --oracle-limit or BLOCKFOREST_ORACLE_LIMIT, max 11)");
}

void enumerate_graphs(int n, int oracle_limit,
                      const std::function<void(const LabeledGraph&)>& visit) {
    check_limit(n, oracle_limit, "enumerate_graphs");
    std::vector<std::pair<int, int>> edge_index;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) edge_index.emplace_back(i, j);
    const uint64_t total = 1ull << edge_index.size();
    for (uint64_t mask = 0; mask < total; ++mask) {
        LabeledGraph g(n);
        for (size_t e = 0; e < edge_index.size(); ++e)
            if ((mask >> e) & 1ull)
                g.add_edge(edge_index[e].first, edge_index[e].second);
        visit(g);
    }
}

// ---- canonical forms -----------------------------------------------------

namespace {

Cert encode_perm(const LabeledGraph& g, const std::vector<int>& q, uint16_t block_mask) {
    Cert c{0, 0, 0};
    for (int i = 0; i < g.n; ++i)
        if ((block_mask >> q[i]) & 1u) c[0] |= 1ull << i;
    int pos = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            if (g.has_edge(q[i], q[j])) c[1 + pos / 64] |= 1ull << (63 - pos % 64);
            ++pos;
        }
    return c;
}

Cert encode_perm(const Digraph& d, const std::vector<int>& q, uint16_t block_mask) {
    Cert c{0, 0, 0};
    for (int i = 0; i < d.n; ++i)
        if ((block_mask >> q[i]) & 1u) c[0] |= 1ull << i;
    int pos = 0;
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) {
            if (i == j) continue;
            if (d.has_arc(q[i], q[j])) c[1 + pos / 64] |= 1ull << (63 - pos % 64);
            ++pos;
        }
    return c;
}

template <typename G>
Cert canonical_impl(const G& g, int root, uint16_t block_mask) {
    if (g.n < 1 || g.n > 11) throw domain_error("canonical form supports 1..11 vertices");
    std::vector<int> q;
    if (root >= 0) {
        q.push_back(root);
        for (int v = 0; v < g.n; ++v)
            if (v != root) q.push_back(v);
    } else {
        q.resize(g.n);
        std::iota(q.begin(), q.end(), 0);
    }
    auto tail = root >= 0 ? q.begin() + 1 : q.begin();
    Cert best = encode_perm(g, q, block_mask);
    while (std::next_permutation(tail, q.end())) {
        Cert cand = encode_perm(g, q, block_mask);
        if (cand < best) best = cand;
    }
    return best;
}

} // namespace

Cert canonical_form(const LabeledGraph& g, int root, uint16_t block_mask) {
    return canonical_impl(g, root, block_mask);
}

Cert canonical_form(const Digraph& d, int root, uint16_t block_mask) {
    return canonical_impl(d, root, block_mask);
}

// ---- orientations ----------------------------------------------------------

namespace {

// Vertices of a cycle block in traversal order, starting at the smallest
// vertex and moving toward its smaller neighbour.
std::vector<int> cycle_order(const Block& b, const LabeledGraph& g) {
    uint16_t mask = 0;
    for (int v : b.vertices) mask |= static_cast<uint16_t>(1u << v);
    const int start = b.vertices.front();
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (true) {
        uint16_t nb = g.adj[cur] & mask;
        int next = -1;
        for (int v = 0; v < g.n; ++v)
            if (((nb >> v) & 1u) && v != prev && (next == -1 || v < next)) next = v;
        if (next == start || next == -1) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

} // namespace

std::vector<Digraph> cactus_orientations(const LabeledGraph& g,
                                         const BlockDecomposition& dec) {
    std::vector<std::vector<int>> big_cycles;
    for (const Block& b : dec.blocks)
        if (b.size() >= 3) big_cycles.push_back(cycle_order(b, g));

    std::vector<Digraph> result;
    const uint32_t assignments = 1u << big_cycles.size();
    for (uint32_t choice = 0; choice < assignments; ++choice) {
        Digraph d(g.n);
        for (const Block& b : dec.blocks)
            if (b.size() == 2) {
                d.add_arc(b.vertices[0], b.vertices[1]);
                d.add_arc(b.vertices[1], b.vertices[0]);
            }
        for (size_t c = 0; c < big_cycles.size(); ++c) {
            const auto& cyc = big_cycles[c];
            const bool flip = (choice >> c) & 1u;
            const int m = static_cast<int>(cyc.size());
            for (int i = 0; i < m; ++i) {
                int u = cyc[i], v = cyc[(i + 1) % m];
                if (flip) std::swap(u, v);
                d.add_arc(u, v);
            }
        }
        result.push_back(d);
    }
    return result;
}

// ---- labelled counting -----------------------------------------------------

namespace {

template <typename Visitor>
void for_each_species_graph(Species s, int n, int oracle_limit, Visitor&& visit) {
    enumerate_graphs(n, oracle_limit, [&](const LabeledGraph& g) {
        if (!is_connected(g)) return;
        BlockDecomposition dec = block_decompose(g);
        if (!matches(classify(dec, g), s)) return;
        visit(g, dec);
    });
}

int big_block_count(const BlockDecomposition& dec) {
    int k = 0;
    for (const Block& b : dec.blocks)
        if (b.size() >= 3) ++k;
    return k;
}

} // namespace

Int count_labeled(Species s, int n, int oracle_limit) {
    Int total = 0;
    for_each_species_graph(s, n, oracle_limit, [&](const LabeledGraph&, const BlockDecomposition& dec) {
        if (s == Species::oriented_cactus)
            total += Int(1) << big_block_count(dec);
        else
            total += 1;
    });
    return total;
}

std::map<std::vector<int>, Int> count_labeled_by_distribution(Species s, int n,
                                                              int oracle_limit) {
    std::map<std::vector<int>, Int> rows;
    for_each_species_graph(s, n, oracle_limit, [&](const LabeledGraph&, const BlockDecomposition& dec) {
        Int add = s == Species::oriented_cactus ? Int(1) << big_block_count(dec) : Int(1);
        rows[block_size_counts(dec)] += add;
    });
    return rows;
}

Int count_labeled_oriented_direct(int n) {
    if (n < 1 || n > 5)
        throw domain_error("direct digraph sweep supports n <= 5 (2^(n(n-1)) arc sets)");
    const int arcs = n * (n - 1);
    std::vector<std::pair<int, int>> arc_index;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arc_index.emplace_back(u, v);
    Int total = 0;
    for (uint32_t mask = 0; mask < (1u << arcs); ++mask) {
        Digraph d(n);
        for (int a = 0; a < arcs; ++a)
            if ((mask >> a) & 1u) d.add_arc(arc_index[a].first, arc_index[a].second);
        if (is_oriented_cactus(d)) total += 1;
    }
    return total;
}

// ---- unlabelled counting ---------------------------------------------------

Int count_unlabeled(Species s, int n, int oracle_limit, bool rooted) {
    if (s == Species::triangular_cactus) return count_unlabeled_triangular(n, rooted);
    std::set<Cert> classes;
    for_each_species_graph(s, n, oracle_limit, [&](const LabeledGraph& g, const BlockDecomposition& dec) {
        if (s == Species::oriented_cactus) {
            for (const Digraph& d : cactus_orientations(g, dec)) {
                if (rooted)
                    for (int r = 0; r < n; ++r) classes.insert(canonical_form(d, r));
                else
                    classes.insert(canonical_form(d));
            }
        } else {
            if (rooted)
                for (int r = 0; r < n; ++r) classes.insert(canonical_form(g, r));
            else
                classes.insert(canonical_form(g));
        }
    });
    return Int(static_cast<long>(classes.size()));
}

std::map<std::vector<int>, Int> count_unlabeled_by_distribution(Species s, int n,
                                                                int oracle_limit,
                                                                bool rooted) {
    std::map<std::vector<int>, std::set<Cert>> classes;
    for_each_species_graph(s, n, oracle_limit, [&](const LabeledGraph& g, const BlockDecomposition& dec) {
        auto key = block_size_counts(dec);
        if (s == Species::oriented_cactus) {
            for (const Digraph& d : cactus_orientations(g, dec)) {
                if (rooted)
                    for (int r = 0; r < n; ++r) classes[key].insert(canonical_form(d, r));
                else
                    classes[key].insert(canonical_form(d));
            }
        } else {
            if (rooted)
                for (int r = 0; r < n; ++r) classes[key].insert(canonical_form(g, r));
            else
                classes[key].insert(canonical_form(g));
        }
    });
    std::map<std::vector<int>, Int> rows;
    for (const auto& [key, set] : classes) rows[key] = Int(static_cast<long>(set.size()));
    return rows;
}

std::vector<LabeledGraph> triangular_representatives(int n) {
    if (n < 1 || n > 11)
        throw domain_error("triangular-cactus generator supports n in 1..11");
    if (n % 2 == 0) return {};
    std::vector<LabeledGraph> reps{LabeledGraph(1)};
    for (int m = 3; m <= n; m += 2) {
        std::map<Cert, LabeledGraph> next;
        for (const LabeledGraph& rep : reps) {
            for (int v = 0; v < rep.n; ++v) {
                LabeledGraph g = rep;
                g.n = m;
                g.add_edge(v, m - 2);
                g.add_edge(v, m - 1);
                g.add_edge(m - 2, m - 1);
                next.emplace(canonical_form(g), g);
            }
        }
        reps.clear();
        for (auto& [cert, g] : next) reps.push_back(g);
    }
    return reps;
}

Int count_unlabeled_triangular(int n, bool rooted) {
    auto reps = triangular_representatives(n);
    if (!rooted) return Int(static_cast<long>(reps.size()));
    std::set<Cert> classes;
    for (const LabeledGraph& g : reps)
        for (int r = 0; r < g.n; ++r) classes.insert(canonical_form(g, r));
    return Int(static_cast<long>(classes.size()));
}

Int count_unlabeled_triangular_enumerated(int n, int oracle_limit, bool rooted) {
    check_limit(n, oracle_limit, "triangular enumeration");
    if (n > 1 && n % 2 == 0) return 0;
    std::set<Cert> classes;
    for_each_species_graph(Species::triangular_cactus, n, oracle_limit,
                           [&](const LabeledGraph& g, const BlockDecomposition&) {
                               if (rooted)
                                   for (int r = 0; r < n; ++r) classes.insert(canonical_form(g, r));
                               else
                                   classes.insert(canonical_form(g));
                           });
    return Int(static_cast<long>(classes.size()));
}

// ---- Burnside --------------------------------------------------------------

Int burnside_unlabeled_count(Species s, int n, int oracle_limit) {
    check_limit(n, oracle_limit, "burnside");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Int fixed_total = 0;

    if (s == Species::oriented_cactus) {
        // Labelled set = oriented-cactus digraphs, represented by arc masks.
        std::vector<uint32_t> structures;
        for_each_species_graph(Species::cactus, n, oracle_limit,
                               [&](const LabeledGraph& g, const BlockDecomposition& dec) {
                                   for (const Digraph& d : cactus_orientations(g, dec)) {
                                       uint32_t mask = 0;
                                       for (int u = 0; u < n; ++u)
                                           for (int v = 0; v < n; ++v)
                                               if (u != v && d.has_arc(u, v))
                                                   mask |= 1u << (u * n + v);
                                       structures.push_back(mask);
                                   }
                               });
        do {
            for (uint32_t mask : structures) {
                uint32_t image = 0;
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        if (u != v && ((mask >> (u * n + v)) & 1u))
                            image |= 1u << (perm[u] * n + perm[v]);
                if (image == mask) fixed_total += 1;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        std::vector<std::pair<int, int>> edge_index;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) edge_index.emplace_back(i, j);
        std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
        for (size_t e = 0; e < edge_index.size(); ++e)
            idx[edge_index[e].first][edge_index[e].second] =
                idx[edge_index[e].second][edge_index[e].first] = static_cast<int>(e);
        std::vector<uint32_t> structures;
        for_each_species_graph(s, n, oracle_limit,
                               [&](const LabeledGraph& g, const BlockDecomposition&) {
                                   uint32_t mask = 0;
                                   for (auto [u, v] : g.edges())
                                       mask |= 1u << idx[u][v];
                                   structures.push_back(mask);
                               });
        do {
            for (uint32_t mask : structures) {
                uint32_t image = 0;
                for (size_t e = 0; e < edge_index.size(); ++e)
                    if ((mask >> e) & 1u)
                        image |= 1u << idx[perm[edge_index[e].first]][perm[edge_index[e].second]];
                if (image == mask) fixed_total += 1;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    Int order = factorial(static_cast<unsigned long>(n));
    if (fixed_total % order != 0)
        throw internal_consistency_error("burnside: total fixed count not divisible by n!");
    return fixed_total / order;
}

// ---- dissymmetry class counts ----------------------------------------------

DissymmetryClassCounts dissymmetry_class_counts(Species s, int n, int oracle_limit) {
    std::set<Cert> plain, vertex_rooted, block_marked, block_vertex;

    auto tally = [&](const auto& structure, const BlockDecomposition& dec) {
        plain.insert(canonical_form(structure));
        for (int r = 0; r < n; ++r) vertex_rooted.insert(canonical_form(structure, r));
        for (const Block& b : dec.blocks) {
            uint16_t mask = 0;
            for (int v : b.vertices) mask |= static_cast<uint16_t>(1u << v);
            block_marked.insert(canonical_form(structure, -1, mask));
            for (int v : b.vertices)
                block_vertex.insert(canonical_form(structure, v, mask));
        }
    };

    if (s == Species::oriented_cactus) {
        for_each_species_graph(Species::cactus, n, oracle_limit,
                               [&](const LabeledGraph& g, const BlockDecomposition& dec) {
                                   for (const Digraph& d : cactus_orientations(g, dec))
                                       tally(d, dec);
                               });
    } else {
        for_each_species_graph(s, n, oracle_limit, tally);
    }

    return DissymmetryClassCounts{Int(static_cast<long>(plain.size())),
                                  Int(static_cast<long>(vertex_rooted.size())),
                                  Int(static_cast<long>(block_marked.size())),
                                  Int(static_cast<long>(block_vertex.size()))};
}

// ---- unlabelled trees via Pruefer sequences + centroid encodings -----------

namespace {

std::vector<std::pair<int, int>> tree_from_sequence(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(n, false);
    for (int v : seq) {
        int leaf = -1;
        for (int u = 0; u < n; ++u)
            if (degree[u] == 1 && !used[u]) {
                leaf = u;
                break;
            }
        used[leaf] = true;
        edges.emplace_back(leaf, v);
        --degree[v];
    }
    int a = -1, b = -1;
    for (int u = 0; u < n; ++u)
        if (degree[u] == 1 && !used[u]) (a < 0 ? a : b) = u;
    edges.emplace_back(a, b);
    return edges;
}

std::string encode_rooted(int v, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> parts;
    for (int w : adj[v])
        if (w != parent) parts.push_back(encode_rooted(w, v, adj));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
}

std::string tree_certificate(const std::vector<std::pair<int, int>>& edges, int n) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    // Centroids: vertices minimizing the largest component of the forest
    // left by their removal.
    std::vector<int> size(n), heaviest(n, 0);
    std::function<void(int, int)> measure = [&](int v, int parent) {
        size[v] = 1;
        for (int w : adj[v])
            if (w != parent) {
                measure(w, v);
                size[v] += size[w];
                heaviest[v] = std::max(heaviest[v], size[w]);
            }
        heaviest[v] = std::max(heaviest[v], n - size[v]);
    };
    measure(0, -1);
    int best = n;
    for (int v = 0; v < n; ++v) best = std::min(best, heaviest[v]);
    std::string cert;
    for (int v = 0; v < n; ++v)
        if (heaviest[v] == best) {
            std::string enc = encode_rooted(v, -1, adj);
            if (cert.empty() || enc < cert) cert = enc;
        }
    return cert;
}

} // namespace

std::vector<Int> unlabeled_tree_counts(int max_n) {
    std::vector<Int> counts;
    for (int n = 1; n <= max_n; ++n) {
        if (n <= 2) {
            counts.push_back(1);
            continue;
        }
        std::set<std::string> classes;
        std::vector<int> seq(n - 2, 0);
        while (true) {
            classes.insert(tree_certificate(tree_from_sequence(seq, n), n));
            int pos = n - 3;
            while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
            if (pos < 0) break;
            ++seq[pos];
        }
        counts.push_back(Int(static_cast<long>(classes.size())));
    }
    return counts;
}

} // namespace blockforest
