#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "blockforest/mayer.hpp"
#include "blockforest/oracle.hpp"

using namespace blockforest;

namespace {

LabeledGraph cycle(int n) {
    LabeledGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

LabeledGraph complete(int n) {
    LabeledGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// Deletion-contraction spanning-tree count on an explicit multigraph edge
// list; independent of the determinant route.
Int tau_deletion_contraction(int n, std::vector<std::pair<int, int>> edges) {
    if (edges.empty()) return n == 1 ? 1 : 0;
    auto [u, v] = edges.back();
    edges.pop_back();
    if (u == v) return tau_deletion_contraction(n, std::move(edges)); // drop loops
    Int deleted = tau_deletion_contraction(n, edges);
    // Contract the higher endpoint into the lower, then move the last
    // vertex into the freed slot.
    const int lo = std::min(u, v), hi = std::max(u, v);
    std::vector<std::pair<int, int>> contracted;
    for (auto [a, b] : edges) {
        if (a == hi) a = lo;
        if (b == hi) b = lo;
        if (hi != n - 1) {
            if (a == n - 1) a = hi;
            if (b == n - 1) b = hi;
        }
        contracted.emplace_back(a, b);
    }
    return deleted + tau_deletion_contraction(n - 1, std::move(contracted));
}

Int tau_dc(const LabeledGraph& g) {
    // Relabel so the contracted vertex can always be renamed to the last.
    return tau_deletion_contraction(g.n, g.edges());
}

} // namespace

TEST_CASE("spanning tree counts of reference graphs") {
    LabeledGraph tree(4);
    tree.add_edge(0, 1);
    tree.add_edge(1, 2);
    tree.add_edge(1, 3);
    CHECK(spanning_tree_count(tree) == 1);
    CHECK(spanning_tree_count(complete(4)) == 16);
    CHECK(spanning_tree_count(cycle(5)) == 5);
    CHECK(spanning_tree_count(LabeledGraph(1)) == 1);

    LabeledGraph disconnected(3);
    disconnected.add_edge(0, 1);
    CHECK(spanning_tree_count(disconnected) == 0);
}

TEST_CASE("matrix-tree agrees with deletion-contraction on every graph with <= 8 edges") {
    for (int n = 1; n <= 6; ++n)
        enumerate_graphs(n, 7, [&](const LabeledGraph& g) {
            if (!is_connected(g) || g.edge_count() > 8) return;
            CHECK(spanning_tree_count(g) == tau_dc(g));
        });
}

TEST_CASE("gaussian weight of a connected graph") {
    LabeledGraph k2(2);
    k2.add_edge(0, 1);
    auto w = GaussianWeight::of_connected(k2);
    CHECK(w.sign == -1);
    CHECK(w.volume_power == 1);
    CHECK(w.complexity == 1);
    CHECK_THROWS_AS(GaussianWeight::of_connected(LabeledGraph(2)), domain_error);
}

TEST_CASE("cluster ring arithmetic") {
    ClusterValue a = ClusterValue::term(Int(3), 1, rat(2));
    ClusterValue b = ClusterValue::term(Int(4), 2, rat(1, 2));
    ClusterValue product = a * b;
    REQUIRE(product.terms().size() == 1);
    auto it = product.terms().begin();
    CHECK(it->first.first == 12);  // complexities multiply
    CHECK(it->first.second == 3);  // u powers add
    CHECK(it->second == rat(1));
    CHECK((a - a).is_zero());
    CHECK(ClusterValue(1).terms().begin()->first == ClusterValue::Key{Int(1), 0});
    CHECK(scale(a, rat(0)).is_zero());
}

TEST_CASE("two-connected weight sums group by complexity") {
    auto beta2 = two_connected_weight_sum(2, 7);
    REQUIRE(beta2.by_gamma.size() == 1);
    CHECK(beta2.by_gamma.at(Int(1)) == rat(-1)); // the single edge, sign (-1)^1

    auto beta3 = two_connected_weight_sum(3, 7);
    REQUIRE(beta3.by_gamma.size() == 1);
    CHECK(beta3.by_gamma.at(Int(3)) == rat(-1)); // the triangle only

    // On [4]: 3 squares (gamma 4, +), 6 diamonds (gamma 8, -), one K4
    // (gamma 16, +); ten graphs in total.
    auto beta4 = two_connected_weight_sum(4, 7);
    std::map<Int, Rat> expected{{Int(4), rat(3)}, {Int(8), rat(-6)}, {Int(16), rat(1)}};
    CHECK(beta4.by_gamma == expected);
    Rat graph_count = rat(0);
    for (const auto& [gamma, coeff] : beta4.by_gamma) graph_count += abs(coeff);
    CHECK(graph_count == rat(10));

    CHECK_THROWS_AS(two_connected_weight_sum(1, 7), domain_error);
}

TEST_CASE("block multiplicativity is exact") {
    for (int n = 1; n <= 5; ++n) {
        auto report = block_multiplicativity_check(n, 7);
        CHECK(report.all_exact);
    }
    // Bowtie by hand: two triangles at a cutpoint.
    LabeledGraph bowtie(5);
    bowtie.add_edge(0, 1);
    bowtie.add_edge(1, 2);
    bowtie.add_edge(0, 2);
    bowtie.add_edge(2, 3);
    bowtie.add_edge(3, 4);
    bowtie.add_edge(2, 4);
    CHECK(spanning_tree_count(bowtie) == 9);
    auto w = GaussianWeight::of_connected(bowtie);
    CHECK(w.sign == 1);
    CHECK(w.volume_power == 4);
}

TEST_CASE("weights multiply over connected components") {
    // G_w(z) = exp(Gamma_w(z)) coefficientwise.
    const int order = 5;
    Series<ClusterValue> gamma_series(order);
    for (int n = 1; n <= order; ++n)
        gamma_series.set(n, scale(connected_weight_sum(n, 7).value(),
                                  Rat(1) / Rat(factorial(n))));
    Series<ClusterValue> all_graphs(order);
    all_graphs.set(0, ClusterValue(1));
    for (int n = 1; n <= order; ++n)
        all_graphs.set(n, scale(all_graphs_weight_sum(n, 7), Rat(1) / Rat(factorial(n))));
    CHECK(exp(gamma_series) == all_graphs);
}

TEST_CASE("density fixed point and virial expansion, both routes") {
    for (int order : {3, 5}) {
        auto report = verify_density_fixed_point(order, 30, 7);
        CHECK(report.fixed_point_exact);
        CHECK(report.virial_exact);
        CHECK(report.agree(1e-12));
        CHECK(report.max_residual_fixed_point == "0");
        CHECK(report.max_residual_virial == "0");
    }
}

TEST_CASE("ideal gas: no interactions collapse the density to z") {
    const int order = 4;
    Series<ClusterValue> rho = Series<ClusterValue>::identity(order);
    Series<ClusterValue> bprime(order); // all beta vanish
    auto rhs = Series<ClusterValue>::identity(order) * exp(compose(bprime, rho));
    CHECK(rhs == rho);
}

TEST_CASE("virial coefficients at alpha = pi and scaled alpha") {
    auto gamma2 = virial_coefficient(2, Alpha::parse("pi"), 30, 7);
    CHECK(to_decimal_string(gamma2.value, 30) == "0.5");

    auto gamma2_scaled = virial_coefficient(2, Alpha::parse("4pi"), 30, 7);
    CHECK(to_decimal_string(gamma2_scaled.value, 30) == "0.0625");

    // General alpha: (1/2)(pi/alpha)^(3/2) via the numeric-pi path.
    auto gamma2_free = virial_coefficient(2, Alpha::parse("3.14159265358979323846264338328"), 30, 7);
    mpf_class diff = abs(gamma2_free.value - 0.5);
    CHECK(diff < 1e-25);

    CHECK_THROWS_AS(virial_coefficient(1, Alpha::parse("pi"), 30, 7), domain_error);
}

TEST_CASE("alpha parsing") {
    CHECK(Alpha::parse("pi").pi_multiple);
    CHECK(Alpha::parse("pi").multiple == 1);
    CHECK(Alpha::parse("2pi").multiple == 2);
    CHECK(Alpha::parse("0.5pi").multiple == rat(1, 2));
    CHECK(Alpha::parse(" 4 pi ").multiple == 4);
    CHECK_FALSE(Alpha::parse("2.5").pi_multiple);
    CHECK(Alpha::parse("2.5").str() == "2.5");
    CHECK_THROWS_AS(Alpha::parse(""), parse_error);
    CHECK_THROWS_AS(Alpha::parse("0pi"), parse_error);
    CHECK_THROWS_AS(Alpha::parse("abc"), parse_error);
}

TEST_CASE("pi computation and decimal formatting") {
    auto pi = compute_pi(bits_for_digits(30));
    CHECK(to_decimal_string(pi, 20) == "3.1415926535897932385");
    CHECK(to_decimal_string(mpf_class(0), 10) == "0");
    CHECK(to_decimal_string(mpf_class(-2.5), 10) == "-2.5");
    CHECK(to_decimal_string(mpf_class(1) / mpf_class(1000000), 5) == "1e-6");
}
