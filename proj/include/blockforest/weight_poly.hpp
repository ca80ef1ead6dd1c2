#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "blockforest/rational.hpp"

namespace blockforest {

// Order on exponent vectors (missing entries read as zero): larger
// exponent of y_2 first, then y_3, and so on. Matches the distribution
// table order, where all-edge rows lead and the single big block closes.
struct ExponentOrder {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        const size_t n = std::max(a.size(), b.size());
        for (size_t i = 0; i < n; ++i) {
            const int av = i < a.size() ? a[i] : 0;
            const int bv = i < b.size() ? b[i] : 0;
            if (av != bv) return av > bv;
        }
        return false;
    }
};

// Polynomial in the block-size markers y_2, y_3, ... over exact rationals.
// Terms are stored sparsely: key[i] is the exponent of y_{i+2}, keys are
// trailing-zero trimmed, and zero coefficients are never kept. Map order
// doubles as the deterministic print and iteration order.
class WeightPoly {
public:
    using Key = std::vector<int>;

    WeightPoly() = default;
    explicit WeightPoly(int constant);
    explicit WeightPoly(const Rat& constant);

    // The monomial y_index^exponent, index >= 2.
    static WeightPoly marker(int index, int exponent = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const; // throws domain_error if non-constant

    const std::map<Key, Rat, ExponentOrder>& terms() const { return terms_; }
    Rat coefficient(const Key& key) const;

    WeightPoly& operator+=(const WeightPoly& other);
    WeightPoly& operator-=(const WeightPoly& other);
    WeightPoly operator-() const;

    // y_i -> y_i^k on every term.
    WeightPoly markers_pow(int k) const;

    // Substitute y_i = 1 for all i.
    Rat eval_ones() const;

    // Largest marker index occurring, or 0 for constants.
    int max_marker() const;

    std::string str() const;

    bool operator==(const WeightPoly& other) const { return terms_ == other.terms_; }

private:
    friend WeightPoly operator*(const WeightPoly&, const WeightPoly&);
    friend WeightPoly scale(const WeightPoly&, const Rat&);
    void add_term(const Key& key, const Rat& coeff);

    std::map<Key, Rat, ExponentOrder> terms_;
};

WeightPoly operator+(const WeightPoly& a, const WeightPoly& b);
WeightPoly operator-(const WeightPoly& a, const WeightPoly& b);
WeightPoly operator*(const WeightPoly& a, const WeightPoly& b);

// Coefficient-ring hooks used by Series<C>.
WeightPoly scale(const WeightPoly& p, const Rat& s);
inline WeightPoly markers_pow(const WeightPoly& p, int k) { return p.markers_pow(k); }
inline bool is_zero(const WeightPoly& p) { return p.is_zero(); }

} // namespace blockforest
