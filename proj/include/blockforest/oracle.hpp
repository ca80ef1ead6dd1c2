#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "blockforest/graph.hpp"
#include "blockforest/rational.hpp"

namespace blockforest {

enum class Species { husimi, cactus, oriented_cactus, triangular_cactus };

const char* species_name(Species s);
bool matches(const SpeciesFlags& flags, Species s);

inline constexpr int kDefaultOracleLimit = 7;

// Oracle limit honoured by every 2^C(n,2) sweep; reads
// BLOCKFOREST_ORACLE_LIMIT when set.
int oracle_limit_from_env();

// Visits every edge subset of the complete graph on [n] in increasing
// bitmask order (edges indexed (0,1),(0,2),(1,2),(0,3),... so graphs on a
// vertex prefix come first). Refuses n above the limit.
void enumerate_graphs(int n, int oracle_limit,
                      const std::function<void(const LabeledGraph&)>& visit);

// Isomorphism-class certificate: minimal mark/adjacency encoding over all
// vertex relabellings (root pinned to position 0 when present). Exhaustive
// permutation search -- fine at oracle scale, guaranteed exact.
using Cert = std::array<uint64_t, 3>;
Cert canonical_form(const LabeledGraph& g, int root = -1, uint16_t block_mask = 0);
Cert canonical_form(const Digraph& d, int root = -1, uint16_t block_mask = 0);

// ---- labelled counting -------------------------------------------------

Int count_labeled(Species s, int n, int oracle_limit);

// Rows keyed by block-size counts (counts[i] = blocks of size i+2),
// ascending lexicographic order.
std::map<std::vector<int>, Int> count_labeled_by_distribution(Species s, int n,
                                                              int oracle_limit);

// Direct digraph sweep over all 2^(n(n-1)) arc sets; n <= 5. Cross-checks
// the orientation-multiplication route used by count_labeled.
Int count_labeled_oriented_direct(int n);

// ---- unlabelled counting -----------------------------------------------

Int count_unlabeled(Species s, int n, int oracle_limit, bool rooted = false);
std::map<std::vector<int>, Int> count_unlabeled_by_distribution(Species s, int n,
                                                                int oracle_limit,
                                                                bool rooted = false);

// Triangular cacti via leaf-triangle augmentation: every class on n
// vertices extends a class on n-2, so the generator is exhaustive without
// sweeping all 2^C(n,2) graphs. Canonical representatives, deterministic
// order. n may exceed the sweep limit (hard cap 11).
std::vector<LabeledGraph> triangular_representatives(int n);
Int count_unlabeled_triangular(int n, bool rooted = false);

// Enumeration-based triangular count for cross-checking the generator.
Int count_unlabeled_triangular_enumerated(int n, int oracle_limit, bool rooted = false);

// Unlabelled count via (1/n!) sum over permutations of fixed labelled
// structures; independent of canonical forms.
Int burnside_unlabeled_count(Species s, int n, int oracle_limit);

// Class counts for the dissymmetry identity: plain classes, vertex-rooted
// classes, distinguished-block classes, and distinguished block-with-vertex
// classes (the vertex on the block).
struct DissymmetryClassCounts {
    Int plain;
    Int vertex_rooted;
    Int block_marked;
    Int block_vertex;
};
DissymmetryClassCounts dissymmetry_class_counts(Species s, int n, int oracle_limit);

// Unlabelled free trees for n = 1..max_n via Pruefer-sequence generation
// and centroid-rooted subtree encodings (independent of the permutation
// canonicalizer).
std::vector<Int> unlabeled_tree_counts(int max_n);

// Orientation assignments of a cactus as digraphs: one entry per choice of
// direction for every polygon block of size >= 3 (edges become 2-cycles).
std::vector<Digraph> cactus_orientations(const LabeledGraph& g,
                                         const BlockDecomposition& dec);

} // namespace blockforest
