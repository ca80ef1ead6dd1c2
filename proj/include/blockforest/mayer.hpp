#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "blockforest/graph.hpp"
#include "blockforest/oracle.hpp"
#include "blockforest/rational.hpp"
#include "blockforest/series.hpp"

namespace blockforest {

// Number of spanning trees (graph complexity), as the determinant of a
// Laplacian minor computed exactly over the integers (fraction-free
// elimination). Disconnected graphs give 0; the single vertex gives 1.
Int spanning_tree_count(const LabeledGraph& g);

// The weight of a connected graph under the soft repulsive pair model:
// sign (-1)^edges, a symbolic factor u^(n-1) with u = (pi/alpha)^(3/2),
// and complexity^(-3/2).
struct GaussianWeight {
    int sign;         // +1 or -1
    int volume_power; // n-1
    Int complexity;   // spanning-tree count, >= 1

    static GaussianWeight of_connected(const LabeledGraph& g);
};

// Exact element of the ring spanned by gamma^(-3/2) u^p over the
// rationals: a sparse map (gamma, p) -> coefficient. Closed under + and *
// because complexities multiply and u-powers add; this is what lets the
// two virial routes be compared exactly before any numeric rounding.
class ClusterValue {
public:
    using Key = std::pair<Int, int>; // (gamma, u power)

    ClusterValue() = default;
    explicit ClusterValue(int constant);
    static ClusterValue term(Int gamma, int u_power, Rat coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rat>& terms() const { return terms_; }

    ClusterValue& operator+=(const ClusterValue& other);
    ClusterValue operator-() const;
    bool operator==(const ClusterValue& other) const { return terms_ == other.terms_; }

    std::string str() const;

private:
    friend ClusterValue operator*(const ClusterValue&, const ClusterValue&);
    friend ClusterValue scale(const ClusterValue&, const Rat&);
    void add_term(const Key& key, const Rat& coeff);

    std::map<Key, Rat> terms_;
};

ClusterValue operator+(const ClusterValue& a, const ClusterValue& b);
ClusterValue operator-(const ClusterValue& a, const ClusterValue& b);
ClusterValue operator*(const ClusterValue& a, const ClusterValue& b);
ClusterValue scale(const ClusterValue& v, const Rat& s);
inline ClusterValue markers_pow(const ClusterValue& v, int) { return v; }
inline bool is_zero(const ClusterValue& v) { return v.is_zero(); }

// Total weight of a graph family on [n], grouped by complexity; the
// u power is n-1 throughout.
struct ClusterSum {
    int n = 0;
    std::map<Int, Rat> by_gamma;

    ClusterValue value() const;
    bool operator==(const ClusterSum& other) const = default;
};

// beta_n as a grouped sum over all labelled 2-connected graphs on [n]
// (K2 counts as 2-connected).
ClusterSum two_connected_weight_sum(int n, int oracle_limit);

// Grouped sum over all connected graphs on [n].
ClusterSum connected_weight_sum(int n, int oracle_limit);

// Grouped sum over all graphs on [n]; weights multiply over connected
// components (u power n - #components, complexity = spanning forests).
ClusterValue all_graphs_weight_sum(int n, int oracle_limit);

// ---- numeric evaluation ----------------------------------------------------

// alpha as given on the command line: either an exact multiple of pi
// ("pi", "2pi", "0.5pi") or a plain positive decimal.
struct Alpha {
    bool pi_multiple = true;
    Rat multiple = rat(1);   // alpha = multiple * pi when pi_multiple
    std::string decimal;     // otherwise a positive decimal literal

    static Alpha parse(const std::string& text);
    std::string str() const;
};

mpf_class compute_pi(mp_bitcnt_t prec);
mpf_class u_from_alpha(const Alpha& alpha, mp_bitcnt_t prec);

struct Evaluation {
    mpf_class value;
    mpf_class error_bound; // conservative forward bound
};

// Numeric value of sum coeff * gamma^(-3/2) * u^p at the given precision.
Evaluation eval_cluster(const ClusterValue& v, const mpf_class& u, mp_bitcnt_t prec);

mp_bitcnt_t bits_for_digits(int digits);
std::string to_decimal_string(const mpf_class& x, int digits);

// n-th virial coefficient -(n-1)/n! * beta_n evaluated numerically.
Evaluation virial_coefficient(int n, const Alpha& alpha, int digits, int oracle_limit);

// ---- series verification -----------------------------------------------------

// Checks, to the given order: (a) the density fixed point
// rho(z) = z exp(B'(rho(z))) built from connected vs 2-connected sums, and
// (b) the virial identity P(rho) = rho - sum (n-1) beta_n rho^n / n!
// against the reversion route P(z(rho)). Both comparisons are made exactly
// in the grouped ring and re-evaluated numerically at the given precision.
struct DualRouteReport {
    int order = 0;
    int digits = 0;
    bool fixed_point_exact = false;
    bool virial_exact = false;
    std::string max_residual_fixed_point; // decimal, evaluated at u = 1
    std::string max_residual_virial;
    bool agree(double tolerance) const;
};
DualRouteReport verify_density_fixed_point(int order, int digits, int oracle_limit);

// Exact block-multiplicativity of the weight on every connected graph on
// [n]: complexity multiplies, edge count and u power add, over blocks.
struct BlockMultReport {
    int n = 0;
    long graphs_checked = 0;
    bool all_exact = true;
    std::string first_failure;
};
BlockMultReport block_multiplicativity_check(int n, int oracle_limit);

} // namespace blockforest
