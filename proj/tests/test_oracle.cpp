#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "blockforest/mayer.hpp"
#include "blockforest/oracle.hpp"

using namespace blockforest;

namespace {

LabeledGraph path3() {
    LabeledGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

LabeledGraph triangle() {
    LabeledGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    return g;
}

LabeledGraph complete(int n) {
    LabeledGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

LabeledGraph cycle(int n) {
    LabeledGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

LabeledGraph bowtie() {
    LabeledGraph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(2, 4);
    return g;
}

} // namespace

TEST_CASE("graph enumeration yields every edge subset in order") {
    int all = 0, connected = 0;
    enumerate_graphs(3, 7, [&](const LabeledGraph& g) {
        ++all;
        if (is_connected(g)) ++connected;
    });
    CHECK(all == 8);
    CHECK(connected == 4);

    int connected4 = 0;
    enumerate_graphs(4, 7, [&](const LabeledGraph& g) {
        if (is_connected(g)) ++connected4;
    });
    CHECK(connected4 == 38);

    int connected2 = 0;
    enumerate_graphs(2, 7, [&](const LabeledGraph& g) {
        if (is_connected(g)) ++connected2;
    });
    CHECK(connected2 == 1);

    CHECK_THROWS_WITH_AS(enumerate_graphs(9, 7, [](const LabeledGraph&) {}),
                         doctest::Contains("oracle limit"), domain_error);
}

TEST_CASE("block decomposition of the reference shapes") {
    auto tri = block_decompose(triangle());
    REQUIRE(tri.blocks.size() == 1);
    CHECK(tri.blocks[0].vertices == std::vector<int>{0, 1, 2});
    CHECK(tri.cutpoints.empty());

    auto path = block_decompose(path3());
    REQUIRE(path.blocks.size() == 2);
    CHECK(path.cutpoints == std::vector<int>{1});
    std::set<std::vector<int>> blocks;
    for (const auto& b : path.blocks) blocks.insert(b.vertices);
    CHECK(blocks == std::set<std::vector<int>>{{0, 1}, {1, 2}});

    auto bt = block_decompose(bowtie());
    CHECK(bt.blocks.size() == 2);
    CHECK(bt.cutpoints == std::vector<int>{2});
    CHECK(bt.tree_edges.size() == 2);

    LabeledGraph disconnected(3);
    disconnected.add_edge(0, 1);
    CHECK_THROWS_AS(block_decompose(disconnected), domain_error);

    // Single vertex: zero blocks.
    CHECK(block_decompose(LabeledGraph(1)).blocks.empty());
}

TEST_CASE("blocks partition the edge set and recombine to the graph") {
    enumerate_graphs(5, 7, [&](const LabeledGraph& g) {
        if (!is_connected(g)) return;
        auto dec = block_decompose(g);
        LabeledGraph rebuilt(g.n);
        int edge_total = 0;
        for (const auto& b : dec.blocks) {
            edge_total += static_cast<int>(b.edges.size());
            for (auto [u, v] : b.edges) {
                CHECK(g.has_edge(u, v));
                rebuilt.add_edge(u, v);
            }
        }
        CHECK(edge_total == g.edge_count());
        CHECK(rebuilt == g);
        // Cutpoints are exactly the vertices lying in two or more blocks.
        for (int v = 0; v < g.n; ++v) {
            int in_blocks = 0;
            for (const auto& b : dec.blocks)
                for (int u : b.vertices)
                    if (u == v) ++in_blocks;
            const bool is_cut =
                std::find(dec.cutpoints.begin(), dec.cutpoints.end(), v) != dec.cutpoints.end();
            CHECK(is_cut == (in_blocks >= 2));
        }
    });
}

TEST_CASE("classification of reference graphs") {
    auto k4 = classify(complete(4));
    CHECK(k4.husimi);
    CHECK_FALSE(k4.cactus);

    auto c4 = classify(cycle(4));
    CHECK_FALSE(c4.husimi);
    CHECK(c4.cactus);
    CHECK_FALSE(c4.triangular);

    auto tri = classify(triangle());
    CHECK(tri.husimi);
    CHECK(tri.cactus);
    CHECK(tri.triangular);

    auto single = classify(LabeledGraph(1));
    CHECK(single.husimi);
    CHECK(single.cactus);
    CHECK(single.triangular);
    CHECK(single.tree);
}

TEST_CASE("classification consistency across the sweep") {
    for (int n = 1; n <= 5; ++n)
        enumerate_graphs(n, 7, [&](const LabeledGraph& g) {
            if (!is_connected(g)) return;
            auto f = classify(g);
            if (f.triangular) {
                CHECK(f.husimi);
                CHECK(f.cactus);
            }
            auto dec = block_decompose(g);
            bool all_edges = true;
            for (const auto& b : dec.blocks) all_edges = all_edges && b.size() == 2;
            CHECK(f.tree == (f.husimi && all_edges));
        });
}

TEST_CASE("labelled species counts at small n") {
    CHECK(count_labeled(Species::husimi, 4, 7) == 29);
    CHECK(count_labeled(Species::husimi, 3, 7) == 4);
    CHECK(count_labeled(Species::cactus, 4, 7) == 31);
    CHECK(count_labeled(Species::oriented_cactus, 3, 7) == 5);
    for (Species s : {Species::husimi, Species::cactus, Species::oriented_cactus,
                      Species::triangular_cactus})
        CHECK(count_labeled(s, 1, 7) == 1);
}

TEST_CASE("direct digraph sweep agrees with orientation multiplication") {
    for (int n = 1; n <= 5; ++n)
        CHECK(count_labeled_oriented_direct(n) ==
              count_labeled(Species::oriented_cactus, n, 7));
}

TEST_CASE("unlabelled counts at small n") {
    CHECK(count_unlabeled(Species::husimi, 4, 7) == 4);
    CHECK(count_unlabeled(Species::triangular_cactus, 5, 7, /*rooted=*/true) == 2);
    for (Species s : {Species::husimi, Species::cactus, Species::oriented_cactus,
                      Species::triangular_cactus})
        CHECK(count_unlabeled(s, 1, 7) == 1);
}

TEST_CASE("triangular generator matches the exhaustive sweep") {
    for (int n : {1, 2, 3, 4, 5, 7}) {
        CHECK(count_unlabeled_triangular(n) ==
              count_unlabeled_triangular_enumerated(n, 7));
        CHECK(count_unlabeled_triangular(n, true) ==
              count_unlabeled_triangular_enumerated(n, 7, true));
    }
    CHECK(count_unlabeled_triangular(7) == 2);
    CHECK(count_unlabeled_triangular(7, true) == 5);
}

TEST_CASE("burnside counts equal canonical-form counts") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(burnside_unlabeled_count(Species::husimi, n, 7) ==
              count_unlabeled(Species::husimi, n, 7));
        CHECK(burnside_unlabeled_count(Species::cactus, n, 7) ==
              count_unlabeled(Species::cactus, n, 7));
    }
    CHECK(burnside_unlabeled_count(Species::oriented_cactus, 4, 7) ==
          count_unlabeled(Species::oriented_cactus, 4, 7));
}

TEST_CASE("dissymmetry identity: rooted + block-marked = plain + block-vertex") {
    for (Species s : {Species::husimi, Species::cactus, Species::triangular_cactus,
                      Species::oriented_cactus}) {
        for (int n = 1; n <= 6; ++n) {
            auto c = dissymmetry_class_counts(s, n, 7);
            CHECK(c.vertex_rooted + c.block_marked == c.plain + c.block_vertex);
        }
    }
}

TEST_CASE("unlabelled tree counts from the independent tree oracle") {
    auto trees = unlabeled_tree_counts(7);
    CHECK(trees == std::vector<Int>{1, 1, 1, 2, 3, 6, 11});
}

TEST_CASE("canonical forms separate and merge correctly") {
    // Paths on 3 vertices are all isomorphic; the triangle is not a path.
    LabeledGraph path_a = path3();
    LabeledGraph path_b(3);
    path_b.add_edge(0, 2);
    path_b.add_edge(1, 2);
    CHECK(canonical_form(path_a) == canonical_form(path_b));
    CHECK(canonical_form(path_a) != canonical_form(triangle()));

    // Rooting distinguishes the centre of the path from its ends.
    CHECK(canonical_form(path_a, 0) == canonical_form(path_a, 2));
    CHECK(canonical_form(path_a, 0) != canonical_form(path_a, 1));
    CHECK(canonical_form(path_a, 0) == canonical_form(path_b, 1));
}
