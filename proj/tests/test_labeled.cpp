#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "blockforest/labeled.hpp"
#include "blockforest/oracle.hpp"

using namespace blockforest;

namespace {

// Independent partition-counting oracle for Stirling numbers.
long count_set_partitions(int m, int k) {
    long total = 0;
    std::vector<int> part_of(m, -1);
    std::function<void(int, int)> rec = [&](int idx, int parts) {
        if (idx == m) {
            if (parts == k) ++total;
            return;
        }
        for (int p = 0; p < parts; ++p) {
            part_of[idx] = p;
            rec(idx + 1, parts);
        }
        part_of[idx] = parts;
        rec(idx + 1, parts + 1);
    };
    rec(0, 0);
    return total;
}

} // namespace

TEST_CASE("stirling numbers of the second kind") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(5, 3) == count_set_partitions(5, 3));
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(4, 0) == 0);
    CHECK(stirling2(2, 5) == 0);
    for (int m = 0; m <= 7; ++m)
        for (int k = 0; k <= m; ++k)
            CHECK(stirling2(m, k) == count_set_partitions(m, k));
}

TEST_CASE("block size distributions") {
    auto d = BlockSizeDistribution::of({{2, 1}, {3, 1}});
    CHECK(d.vertex_count() == 4);
    CHECK(d.block_count() == 2);
    CHECK(d.str() == "n2=1,n3=1");
    CHECK(BlockSizeDistribution().vertex_count() == 1);
    CHECK(BlockSizeDistribution().str() == "-");

    auto all3 = BlockSizeDistribution::all_for_vertex_count(3);
    REQUIRE(all3.size() == 2);
    CHECK(all3[0] == BlockSizeDistribution::of({{2, 2}}));
    CHECK(all3[1] == BlockSizeDistribution::of({{3, 1}}));

    auto all1 = BlockSizeDistribution::all_for_vertex_count(1);
    REQUIRE(all1.size() == 1);
    CHECK(all1[0].empty());

    CHECK_THROWS_AS(BlockSizeDistribution({-1}), domain_error);
}

TEST_CASE("husimi labelled totals") {
    CHECK(husimi_labeled_total(1) == 1);
    CHECK(husimi_labeled_total(3) == 4);
    CHECK(husimi_labeled_total(4) == 29);
    CHECK(husimi_labeled_total(3) == count_labeled(Species::husimi, 3, 7));
    CHECK(husimi_labeled_total(4) == count_labeled(Species::husimi, 4, 7));
}

TEST_CASE("husimi counts by distribution") {
    // Trees specialize to Cayley's formula.
    for (int n = 2; n <= 8; ++n)
        CHECK(husimi_labeled_by_distribution(BlockSizeDistribution::of({{2, n - 1}})) ==
              pow_int(Int(n), n - 2));
    CHECK(husimi_labeled_by_distribution(BlockSizeDistribution::of({{3, 1}})) == 1);
    CHECK(husimi_labeled_by_distribution(BlockSizeDistribution::of({{2, 1}, {3, 1}})) == 12);
}

TEST_CASE("oriented cacti labelled counts") {
    CHECK(oriented_cacti_labeled_total(1) == 1);
    CHECK(oriented_cacti_labeled_total(2) == 1);
    CHECK(oriented_cacti_labeled_total(3) == 5);
    CHECK(oriented_cacti_by_distribution(BlockSizeDistribution::of({{3, 1}})) == 2);
    CHECK(oriented_cacti_labeled_total(3) == count_labeled(Species::oriented_cactus, 3, 7));
    CHECK(oriented_cacti_labeled_total(4) == count_labeled(Species::oriented_cactus, 4, 7));
}

TEST_CASE("cacti labelled counts") {
    for (int n = 2; n <= 8; ++n)
        CHECK(cacti_by_distribution(BlockSizeDistribution::of({{2, n - 1}})) ==
              pow_int(Int(n), n - 2));
    CHECK(cacti_by_distribution(BlockSizeDistribution::of({{3, 1}})) == 1);
    CHECK(cacti_labeled_total(4) == 31);
    CHECK(cacti_labeled_total(3) == 4);
    CHECK(cacti_labeled_total(4) == count_labeled(Species::cactus, 4, 7));
}

TEST_CASE("distribution tables") {
    auto husimi3 = distribution_table(Species::husimi, 3);
    REQUIRE(husimi3.rows.size() == 2);
    CHECK(husimi3.rows[0].first == BlockSizeDistribution::of({{2, 2}}));
    CHECK(husimi3.rows[0].second == 3);
    CHECK(husimi3.rows[1].first == BlockSizeDistribution::of({{3, 1}}));
    CHECK(husimi3.rows[1].second == 1);

    for (Species s : {Species::husimi, Species::cactus, Species::oriented_cactus}) {
        auto table1 = distribution_table(s, 1);
        REQUIRE(table1.rows.size() == 1);
        CHECK(table1.rows[0].first.empty());
        CHECK(table1.rows[0].second == 1);
    }

    auto oriented3 = distribution_table(Species::oriented_cactus, 3);
    REQUIRE(oriented3.rows.size() == 2);
    CHECK(oriented3.rows[0].second == 3);
    CHECK(oriented3.rows[1].second == 2);
    CHECK(oriented3.total() == 5);
}

TEST_CASE("table sums equal species totals") {
    for (int n = 1; n <= 8; ++n)
        for (Species s : {Species::husimi, Species::cactus, Species::oriented_cactus})
            CHECK(distribution_table(s, n).total() == labeled_total(s, n));
}

TEST_CASE("inter-formula identities across distributions") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& d : BlockSizeDistribution::all_for_vertex_count(n)) {
            Int factor_cycles = 1;
            for (size_t i = 0; i < d.counts().size(); ++i)
                factor_cycles *=
                    pow_int(factorial(static_cast<unsigned long>(i + 1)), d.counts()[i]);
            CHECK(oriented_cacti_by_distribution(d) ==
                  factor_cycles * husimi_labeled_by_distribution(d));
            CHECK(oriented_cacti_by_distribution(d) ==
                  pow_int(Int(2), d.big_block_count()) * cacti_by_distribution(d));
        }
}

TEST_CASE("totals and tables match the oracle up to n = 5") {
    for (int n = 1; n <= 5; ++n)
        for (Species s : {Species::husimi, Species::cactus, Species::oriented_cactus}) {
            CHECK(labeled_total(s, n) == count_labeled(s, n, 7));
            auto oracle_rows = count_labeled_by_distribution(s, n, 7);
            auto table = distribution_table(s, n);
            REQUIRE(table.rows.size() == oracle_rows.size());
            for (const auto& [d, count] : table.rows) {
                auto it = oracle_rows.find(d.counts());
                REQUIRE(it != oracle_rows.end());
                CHECK(it->second == count);
            }
        }
}

TEST_CASE("lagrange route reproduces the labelled totals") {
    const int max_n = 10;
    for (Species s : {Species::husimi, Species::cactus, Species::oriented_cactus}) {
        auto kernel = lagrange_kernel(s, max_n);
        for (int n = 1; n <= max_n; ++n) {
            // n * total = n! [x^n] A for the rooted fixed point A = x R(A).
            Rat egf_coeff = lagrange_invert(kernel, n);
            CHECK(Rat(Int(n) * labeled_total(s, n)) ==
                  Rat(factorial(static_cast<unsigned long>(n))) * egf_coeff);
        }
    }
}
