#include "blockforest/labeled.hpp"

#include <algorithm>
#include <functional>

namespace blockforest {

BlockSizeDistribution::BlockSizeDistribution(std::vector<int> counts)
    : counts_(std::move(counts)) {
    for (int c : counts_)
        if (c < 0) throw domain_error("block counts must be non-negative");
    while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

BlockSizeDistribution BlockSizeDistribution::of(
    std::initializer_list<std::pair<int, int>> items) {
    std::vector<int> counts;
    for (auto [size, count] : items) {
        if (size < 2) throw domain_error("block size must be >= 2");
        if (size - 2 >= static_cast<int>(counts.size())) counts.resize(size - 1, 0);
        counts[size - 2] += count;
    }
    return BlockSizeDistribution(std::move(counts));
}

int BlockSizeDistribution::count_of(int block_size) const {
    const int idx = block_size - 2;
    if (idx < 0 || idx >= static_cast<int>(counts_.size())) return 0;
    return counts_[idx];
}

int BlockSizeDistribution::vertex_count() const {
    int n = 1;
    for (size_t i = 0; i < counts_.size(); ++i)
        n += counts_[i] * static_cast<int>(i + 1); // block of size i+2 adds i+1
    return n;
}

int BlockSizeDistribution::block_count() const {
    int k = 0;
    for (int c : counts_) k += c;
    return k;
}

int BlockSizeDistribution::big_block_count() const {
    int k = 0;
    for (size_t i = 1; i < counts_.size(); ++i) k += counts_[i];
    return k;
}

std::string BlockSizeDistribution::str() const {
    if (counts_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] == 0) continue;
        if (!out.empty()) out += ",";
        out += "n" + std::to_string(i + 2) + "=" + std::to_string(counts_[i]);
    }
    return out;
}

std::vector<BlockSizeDistribution> BlockSizeDistribution::all_for_vertex_count(int n) {
    if (n < 1) throw domain_error("vertex count must be >= 1");
    // Partitions of n-1 into parts j >= 1; a part j is a block of size j+1.
    std::vector<BlockSizeDistribution> out;
    std::vector<int> counts; // counts[i] = blocks of size i+2
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(counts);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            if (part - 1 >= static_cast<int>(counts.size())) counts.resize(part, 0);
            ++counts[part - 1];
            rec(remaining - part, part);
            --counts[part - 1];
            while (!counts.empty() && counts.back() == 0) counts.pop_back();
        }
    };
    rec(n - 1, n - 1);
    std::sort(out.begin(), out.end());
    return out;
}

Int CountTable::total() const {
    Int t = 0;
    for (const auto& [d, c] : rows) t += c;
    return t;
}

Int stirling2(int m, int k) {
    if (m < 0 || k < 0) throw domain_error("stirling2 arguments must be >= 0");
    if (k > m) return 0;
    // S(m,k) = k S(m-1,k) + S(m-1,k-1), rolling row.
    std::vector<Int> row(static_cast<size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= m; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[j] = Int(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

Int husimi_labeled_total(int n) {
    if (n < 1) throw domain_error("husimi total: n must be >= 1");
    if (n == 1) return 1;
    Int total = 0;
    for (int k = 1; k <= n - 1; ++k)
        total += stirling2(n - 1, k) * pow_int(Int(n), k - 1);
    return total;
}

Int husimi_labeled_by_distribution(const BlockSizeDistribution& d) {
    const int n = d.vertex_count();
    const int k = d.block_count();
    if (n == 1) return 1;
    Rat value(factorial(n - 1) * pow_int(Int(n), k - 1));
    for (size_t i = 0; i < d.counts().size(); ++i) {
        const int ni = d.counts()[i];
        if (ni == 0) continue;
        const int block_size = static_cast<int>(i) + 2;
        value /= Rat(pow_int(factorial(block_size - 1), ni) * factorial(ni));
    }
    return to_int(value);
}

Int oriented_cacti_labeled_total(int n) {
    if (n < 1) throw domain_error("oriented cacti total: n must be >= 1");
    if (n == 1) return 1;
    Int total = 0;
    for (int k = 1; k <= n - 1; ++k) {
        // (n-1)!/k! C(n-2,k-1) n^(k-1); C(0,0)=1 makes n=2 come out as 1.
        Rat term = rat(factorial(n - 1), factorial(k));
        term *= Rat(binomial(n - 2, k - 1) * pow_int(Int(n), k - 1));
        total += to_int(term);
    }
    return total;
}

Int oriented_cacti_by_distribution(const BlockSizeDistribution& d) {
    const int n = d.vertex_count();
    const int k = d.block_count();
    if (n == 1) return 1;
    Rat value(factorial(n - 1) * pow_int(Int(n), k - 1));
    for (int ni : d.counts())
        if (ni > 0) value /= Rat(factorial(ni));
    return to_int(value);
}

Int cacti_by_distribution(const BlockSizeDistribution& d) {
    const int n = d.vertex_count();
    const int k = d.block_count();
    if (n == 1) return 1;
    Rat value(factorial(n - 1) * pow_int(Int(n), k - 1));
    value /= Rat(pow_int(Int(2), d.big_block_count()));
    for (int ni : d.counts())
        if (ni > 0) value /= Rat(factorial(ni));
    return to_int(value);
}

Int cacti_labeled_total(int n) {
    if (n < 1) throw domain_error("cacti total: n must be >= 1");
    Int total = 0;
    for (const auto& d : BlockSizeDistribution::all_for_vertex_count(n))
        total += cacti_by_distribution(d);
    return total;
}

Int labeled_by_distribution(Species s, const BlockSizeDistribution& d) {
    switch (s) {
        case Species::husimi: return husimi_labeled_by_distribution(d);
        case Species::cactus: return cacti_by_distribution(d);
        case Species::oriented_cactus: return oriented_cacti_by_distribution(d);
        default:
            throw domain_error("labelled counting covers husimi, cacti and oriented cacti");
    }
}

Int labeled_total(Species s, int n) {
    switch (s) {
        case Species::husimi: return husimi_labeled_total(n);
        case Species::cactus: return cacti_labeled_total(n);
        case Species::oriented_cactus: return oriented_cacti_labeled_total(n);
        default:
            throw domain_error("labelled counting covers husimi, cacti and oriented cacti");
    }
}

CountTable distribution_table(Species s, int n) {
    CountTable table;
    for (const auto& d : BlockSizeDistribution::all_for_vertex_count(n))
        table.rows.emplace_back(d, labeled_by_distribution(s, d));
    return table;
}

Series<Rat> lagrange_kernel(Species s, int order) {
    Series<Rat> arg(order);
    switch (s) {
        case Species::husimi: {
            // e^x - 1
            Series<Rat> e = exp(Series<Rat>::identity(order));
            e.set(0, rat(0));
            arg = e;
            break;
        }
        case Species::oriented_cactus:
            // x/(1-x)
            for (int m = 1; m <= order; ++m) arg.set(m, rat(1));
            break;
        case Species::cactus:
            // x + x^2/(2(1-x)): one block of each size, polygons halved
            arg.set(1, rat(1));
            for (int m = 2; m <= order; ++m) arg.set(m, rat(1, 2));
            break;
        default:
            throw domain_error("no labelled rooted kernel for this species");
    }
    return exp(arg);
}

} // namespace blockforest
