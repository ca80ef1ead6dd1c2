#pragma once

#include <compare>
#include <string>
#include <vector>

#include "blockforest/oracle.hpp"
#include "blockforest/rational.hpp"
#include "blockforest/series.hpp"
#include "blockforest/weight_poly.hpp"

namespace blockforest {

// Block-size distribution (n_2, n_3, ...): counts[i] blocks of size i+2,
// trailing-zero trimmed. The vertex count n = sum n_i(i-1) + 1 and the
// block count k = sum n_i are always derived, never stored.
class BlockSizeDistribution {
public:
    BlockSizeDistribution() = default; // the single-vertex (empty) distribution
    explicit BlockSizeDistribution(std::vector<int> counts);

    // {size: count} convenience, e.g. {{2, 3}} = three blocks of size 2.
    static BlockSizeDistribution of(std::initializer_list<std::pair<int, int>> items);

    const std::vector<int>& counts() const { return counts_; }
    int count_of(int block_size) const;
    bool empty() const { return counts_.empty(); }

    int vertex_count() const; // n
    int block_count() const;  // k
    int big_block_count() const; // blocks of size >= 3

    std::string str() const; // "n2=2,n3=1"; "-" when empty

    bool operator==(const BlockSizeDistribution&) const = default;
    // Table order: all-edge distributions first, the single big block last.
    bool operator<(const BlockSizeDistribution& other) const {
        return ExponentOrder{}(counts_, other.counts_);
    }

    // Every distribution with the given vertex count, in table order.
    static std::vector<BlockSizeDistribution> all_for_vertex_count(int n);

private:
    std::vector<int> counts_;
};

struct CountTable {
    std::vector<std::pair<BlockSizeDistribution, Int>> rows;
    Int total() const;
};

// Stirling numbers of the second kind; S(0,0) = 1.
Int stirling2(int m, int k);

Int husimi_labeled_total(int n);
Int husimi_labeled_by_distribution(const BlockSizeDistribution& d);
Int oriented_cacti_labeled_total(int n);
Int oriented_cacti_by_distribution(const BlockSizeDistribution& d);
Int cacti_labeled_total(int n);
Int cacti_by_distribution(const BlockSizeDistribution& d);

Int labeled_total(Species s, int n);
Int labeled_by_distribution(Species s, const BlockSizeDistribution& d);

// One row per distribution with vertex count n, in distribution order.
CountTable distribution_table(Species s, int n);

// R(x) of the rooted functional equation A = x R(A) for the species'
// exponential generating function: exp(e^x - 1) for Husimi graphs,
// exp(x/(1-x)) for oriented cacti, exp(x + x^2/(2(1-x))) for cacti.
Series<Rat> lagrange_kernel(Species s, int order);

} // namespace blockforest
