#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockforest/husimi_graph.hpp"

namespace blockforest {

// Code of a Husimi graph with k blocks: the articulation sequence lambda
// (length k-1) and the partition pi (k parts) of [n] minus the last
// sequence element. Parts are kept sorted, and the list of parts sorted
// lexicographically, so pi is an honest set partition. The single-vertex
// graph has the empty code.
struct PruferCode {
    std::vector<int> lambda;
    std::vector<std::vector<int>> pi;

    bool operator==(const PruferCode& other) const = default;
};

PruferCode make_code(std::vector<int> lambda, std::vector<std::vector<int>> pi);

// The leaf-block b minimizing min(b \ {j_b}) together with its unique
// articulation point; no articulation point when the graph has a single
// block.
struct LeafBlockChoice {
    std::vector<int> block;
    std::optional<int> articulation;
};
LeafBlockChoice leaf_block_select(const HusimiGraph& h);

// Repeatedly strips the selected leaf-block, recording its articulation
// point in lambda and the removed vertices as a part of pi; after k-1
// steps the last block minus the last articulation point becomes the
// final part. With one block: lambda empty, pi = {the block}.
PruferCode prufer_encode(const HusimiGraph& h);

// Inverse of prufer_encode; validates the code against n and the
// reconstructed structure.
HusimiGraph prufer_decode(const PruferCode& code, int n);

// Vertex count a code of this shape describes.
int code_vertex_count(const PruferCode& code);

// Every valid code on [n] (exhaustive; for oracle-scale n only).
std::vector<PruferCode> enumerate_codes(int n);

// Text format: "lambda: 2,4; pi: {1}|{3}"; "-" for an empty list.
std::string format_code(const PruferCode& code);
PruferCode parse_code(const std::string& line);

} // namespace blockforest
