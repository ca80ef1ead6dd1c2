#pragma once

#include <string>
#include <vector>

#include "blockforest/graph.hpp"

namespace blockforest {

// A Husimi graph given by its block hypergraph: vertices 1..n, blocks as
// sorted vertex subsets of size >= 2 (edges are derivable as within-block
// pairs). The single vertex (n = 1, no blocks) is admitted as the
// degenerate case. Blocks are kept sorted lexicographically so equality is
// structural equality.
struct HusimiGraph {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    bool operator==(const HusimiGraph& other) const = default;
};

// Normalizes (sorts) the blocks; no validation.
HusimiGraph make_husimi(int n, std::vector<std::vector<int>> blocks);

// Full structural validation: every block has size >= 2 with vertices in
// 1..n, the union of blocks is [n], two blocks share at most one vertex,
// and the blocks are exactly the blocks of the clique graph they span
// (which forces connectivity and an acyclic block-cutpoint structure).
// Throws domain_error otherwise.
void validate_husimi(const HusimiGraph& h);

// Clique graph on 0..n-1 spanned by the blocks.
LabeledGraph husimi_to_graph(const HusimiGraph& h);

// Reads the blocks off a connected graph all of whose blocks are complete
// (throws domain_error if some block is not).
HusimiGraph husimi_from_graph(const LabeledGraph& g);

// Text format, one graph per line: "3; {1,2},{2,3}"; "1;" for the single
// vertex. See docs/formats.md.
std::string format_husimi(const HusimiGraph& h);
HusimiGraph parse_husimi(const std::string& line);

} // namespace blockforest
