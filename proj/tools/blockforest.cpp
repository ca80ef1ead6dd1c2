// blockforest: exact enumeration of Husimi graphs, cacti, oriented and
// triangular cacti (labelled and unlabelled), the block-forest encoding of
// Husimi graphs, and the soft-pair-potential virial series, with brute-force
// oracles behind every formula.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "blockforest/labeled.hpp"
#include "blockforest/mayer.hpp"
#include "blockforest/oracle.hpp"
#include "blockforest/prufer.hpp"
#include "blockforest/unlabeled.hpp"

using json = nlohmann::ordered_json;
using namespace blockforest;

namespace {

Species parse_species(const std::string& name) {
    if (name == "husimi") return Species::husimi;
    if (name == "cacti" || name == "cactus") return Species::cactus;
    if (name == "oriented") return Species::oriented_cactus;
    if (name == "triangular") return Species::triangular_cactus;
    throw CLI::ValidationError("species", "unknown species: " + name);
}

std::string monomial_string(const WeightPoly::Key& key) {
    std::string out;
    for (size_t i = 0; i < key.size(); ++i) {
        if (key[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "y" + std::to_string(i + 2);
        if (key[i] > 1) out += "^" + std::to_string(key[i]);
    }
    return out.empty() ? "1" : out;
}

json blocks_json(const BlockSizeDistribution& d) {
    json b = json::object();
    for (size_t i = 0; i < d.counts().size(); ++i)
        if (d.counts()[i] > 0) b[std::to_string(i + 2)] = d.counts()[i];
    return b;
}

// ---- count ------------------------------------------------------------------

struct CountOptions {
    std::string species;
    int n = 1;
    bool by_distribution = false;
    std::string format = "tsv";
};

int run_count(const CountOptions& opt) {
    Species s = parse_species(opt.species);
    if (s == Species::triangular_cactus)
        throw domain_error("labelled counting covers husimi, cacti and oriented");
    if (opt.by_distribution) {
        CountTable table = distribution_table(s, opt.n);
        if (opt.format == "json") {
            json out;
            out["command"] = "count";
            out["species"] = species_name(s);
            out["n"] = opt.n;
            out["count"] = table.total().get_str();
            json rows = json::array();
            for (const auto& [d, c] : table.rows)
                rows.push_back({{"distribution", d.str()},
                                {"blocks", blocks_json(d)},
                                {"count", c.get_str()}});
            out["rows"] = rows;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "distribution\tcount\n";
            for (const auto& [d, c] : table.rows)
                std::cout << d.str() << "\t" << c.get_str() << "\n";
        }
    } else {
        Int total = labeled_total(s, opt.n);
        if (opt.format == "json") {
            json out;
            out["command"] = "count";
            out["species"] = species_name(s);
            out["n"] = opt.n;
            out["count"] = total.get_str();
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "species\tn\tcount\n";
            std::cout << species_name(s) << "\t" << opt.n << "\t" << total.get_str() << "\n";
        }
    }
    return 0;
}

// ---- unlabeled --------------------------------------------------------------

struct UnlabeledOptions {
    std::string species;
    int order = kDefaultSeriesOrder;
    bool weighted = false;
    std::string format = "tsv";
};

int run_unlabeled(const UnlabeledOptions& opt) {
    Species s = parse_species(opt.species);
    if (opt.weighted && s != Species::oriented_cactus)
        throw CLI::ValidationError("--weighted", "weighted output exists for oriented cacti only");

    std::vector<std::string> rooted(static_cast<size_t>(opt.order) + 1);
    std::vector<std::string> unrooted(static_cast<size_t>(opt.order) + 1);
    std::vector<std::vector<std::array<std::string, 3>>> monomials;

    if (s == Species::triangular_cactus) {
        auto bundle = triangular_cactus_series(opt.order);
        for (int i = 1; i <= opt.order; ++i) {
            rooted[i] = to_int(bundle.rooted[i]).get_str();
            unrooted[i] = to_int(bundle.unrooted[i]).get_str();
        }
    } else if (s == Species::husimi) {
        auto bundle = husimi_series(opt.order);
        for (int i = 1; i <= opt.order; ++i) {
            rooted[i] = to_int(bundle.rooted[i]).get_str();
            unrooted[i] = to_int(bundle.unrooted[i]).get_str();
        }
    } else if (s == Species::oriented_cactus) {
        auto bundle = oriented_cactus_series(opt.order);
        monomials.resize(static_cast<size_t>(opt.order) + 1);
        for (int i = 1; i <= opt.order; ++i) {
            rooted[i] = to_int(bundle.rooted[i].eval_ones()).get_str();
            unrooted[i] = to_int(bundle.unrooted[i].eval_ones()).get_str();
            if (opt.weighted) {
                std::vector<WeightPoly::Key> keys;
                for (const auto& [key, c] : bundle.rooted[i].terms()) keys.push_back(key);
                for (const auto& [key, c] : bundle.unrooted[i].terms()) keys.push_back(key);
                std::sort(keys.begin(), keys.end(), ExponentOrder{});
                keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
                for (const auto& key : keys)
                    monomials[i].push_back(
                        {monomial_string(key),
                         to_int(bundle.rooted[i].coefficient(key)).get_str(),
                         to_int(bundle.unrooted[i].coefficient(key)).get_str()});
            }
        }
    } else {
        throw domain_error(
            "unlabelled series cover triangular, husimi and oriented (general cacti "
            "have no recurrence here)");
    }

    if (opt.format == "json") {
        json out;
        out["command"] = "unlabeled";
        out["species"] = species_name(s);
        out["order"] = opt.order;
        json rows = json::array();
        for (int i = 1; i <= opt.order; ++i) {
            json row{{"n", i}, {"rooted", rooted[i]}, {"unrooted", unrooted[i]}};
            if (opt.weighted) {
                json ms = json::array();
                for (const auto& entry : monomials[i])
                    ms.push_back({{"monomial", entry[0]},
                                  {"rooted", entry[1]},
                                  {"unrooted", entry[2]}});
                row["monomials"] = ms;
            }
            rows.push_back(row);
        }
        out["rows"] = rows;
        std::cout << out.dump(2) << "\n";
    } else if (opt.weighted) {
        std::cout << "n\tmonomial\trooted\tunrooted\n";
        for (int i = 1; i <= opt.order; ++i)
            for (const auto& entry : monomials[i])
                std::cout << i << "\t" << entry[0] << "\t" << entry[1] << "\t" << entry[2]
                          << "\n";
    } else {
        std::cout << "n\trooted\tunrooted\n";
        for (int i = 1; i <= opt.order; ++i)
            std::cout << i << "\t" << rooted[i] << "\t" << unrooted[i] << "\n";
    }
    return 0;
}

// ---- prufer -----------------------------------------------------------------

struct PruferOptions {
    std::string direction;
    std::string input; // literal line; stdin when empty
};

int run_prufer(const PruferOptions& opt) {
    std::vector<std::string> lines;
    if (!opt.input.empty()) {
        lines.push_back(opt.input);
    } else {
        std::string line;
        while (std::getline(std::cin, line))
            if (!line.empty()) lines.push_back(line);
    }
    int line_no = 0;
    for (const auto& line : lines) {
        ++line_no;
        try {
            if (opt.direction == "encode") {
                HusimiGraph h = parse_husimi(line);
                std::cout << format_code(prufer_encode(h)) << "\n";
            } else {
                PruferCode code = parse_code(line);
                HusimiGraph h = prufer_decode(code, code_vertex_count(code));
                std::cout << format_husimi(h) << "\n";
            }
        } catch (const domain_error& e) {
            throw domain_error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return 0;
}

// ---- virial -----------------------------------------------------------------

struct VirialOptions {
    int n_max = 4;
    std::string alpha = "pi";
    int precision = 30;
    int oracle_limit = kDefaultOracleLimit;
};

int run_virial(const VirialOptions& opt) {
    Alpha alpha = Alpha::parse(opt.alpha);
    const mp_bitcnt_t prec = bits_for_digits(opt.precision);
    const mpf_class u = u_from_alpha(alpha, prec);

    json out;
    out["command"] = "virial";
    out["alpha"] = alpha.str();
    out["precision"] = opt.precision;
    out["n_max"] = opt.n_max;
    json rows = json::array();
    for (int n = 2; n <= opt.n_max; ++n) {
        ClusterSum beta = two_connected_weight_sum(n, opt.oracle_limit);
        json beta_terms = json::array();
        for (const auto& [gamma, coeff] : beta.by_gamma)
            beta_terms.push_back({{"gamma", gamma.get_str()},
                                  {"coefficient", coeff.get_str()}});
        ClusterValue coefficient =
            scale(beta.value(), -rat(n - 1) / Rat(factorial(static_cast<unsigned long>(n))));
        Evaluation eval = eval_cluster(coefficient, u, prec);
        rows.push_back({{"n", n},
                        {"beta", beta_terms},
                        {"virial", to_decimal_string(eval.value, opt.precision)},
                        {"error_bound", to_decimal_string(eval.error_bound, 3)}});
    }
    out["rows"] = rows;

    DualRouteReport report = verify_density_fixed_point(opt.n_max, opt.precision, opt.oracle_limit);
    out["verification"] = {
        {"order", report.order},
        {"fixed_point_exact", report.fixed_point_exact},
        {"virial_dual_route_exact", report.virial_exact},
        {"max_residual_fixed_point", report.max_residual_fixed_point},
        {"max_residual_virial", report.max_residual_virial},
        {"verdict", report.agree(1e-12) ? "agree" : "disagree"},
    };
    std::cout << out.dump(2) << "\n";
    if (!report.agree(1e-12))
        throw internal_consistency_error("virial dual-route verification disagrees");
    return 0;
}

// ---- oracle -----------------------------------------------------------------

struct OracleOptions {
    std::string species;
    int n = 1;
    bool unlabeled = false;
    bool rooted = false;
    bool by_distribution = false;
    int oracle_limit = kDefaultOracleLimit;
    std::string format = "tsv";
};

int run_oracle(const OracleOptions& opt) {
    Species s = parse_species(opt.species);
    json out;
    out["command"] = "oracle";
    out["species"] = species_name(s);
    out["n"] = opt.n;
    out["mode"] = opt.unlabeled ? (opt.rooted ? "unlabeled-rooted" : "unlabeled") : "labeled";

    if (opt.by_distribution) {
        std::map<std::vector<int>, Int> rows =
            opt.unlabeled ? count_unlabeled_by_distribution(s, opt.n, opt.oracle_limit, opt.rooted)
                          : count_labeled_by_distribution(s, opt.n, opt.oracle_limit);
        std::vector<std::pair<BlockSizeDistribution, Int>> sorted;
        for (const auto& [counts, c] : rows)
            sorted.emplace_back(BlockSizeDistribution(counts), c);
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (opt.format == "json") {
            json jr = json::array();
            for (const auto& [d, c] : sorted)
                jr.push_back({{"distribution", d.str()},
                              {"blocks", blocks_json(d)},
                              {"count", c.get_str()}});
            out["rows"] = jr;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "distribution\tcount\n";
            for (const auto& [d, c] : sorted)
                std::cout << d.str() << "\t" << c.get_str() << "\n";
        }
        return 0;
    }

    Int count = opt.unlabeled ? count_unlabeled(s, opt.n, opt.oracle_limit, opt.rooted)
                              : count_labeled(s, opt.n, opt.oracle_limit);
    if (opt.format == "json") {
        out["count"] = count.get_str();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "species\tn\tmode\tcount\n";
        std::cout << species_name(s) << "\t" << opt.n << "\t" << out["mode"].get<std::string>()
                  << "\t" << count.get_str() << "\n";
    }
    return 0;
}

// ---- selftest -----------------------------------------------------------------

struct SelftestOptions {
    std::string level = "fast";
    int oracle_limit = kDefaultOracleLimit;
    bool inject_fault = false; // exercises the failure path
};

int run_selftest(const SelftestOptions& opt) {
    int failures = 0;
    auto invariant = [&](const std::string& name, auto&& body) {
        try {
            body();
            std::cout << "ok   " << name << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL " << name << ": " << e.what() << "\n";
        }
    };

    invariant("recurrences match functional equations to order 12", [&] {
        triangular_cactus_series(12);
        husimi_series(12);
        oriented_cactus_series(12);
        if (opt.inject_fault) {
            auto good = triangular_rooted_recurrence(12);
            auto bad = good;
            bad.set(5, bad[5] + rat(1));
            require_series_equal(good, bad, "triangular rooted recurrence (injected fault)");
        }
    });
    invariant("cayley specialization, n = 2..12", [&] {
        for (int n = 2; n <= 12; ++n)
            if (husimi_labeled_by_distribution(BlockSizeDistribution::of({{2, n - 1}})) !=
                pow_int(Int(n), n - 2))
                throw internal_consistency_error("cayley specialization fails at n=" +
                                                 std::to_string(n));
    });
    invariant("distribution tables sum to species totals, n <= 8", [&] {
        for (int n = 1; n <= 8; ++n)
            for (Species s : {Species::husimi, Species::cactus, Species::oriented_cactus})
                if (distribution_table(s, n).total() != labeled_total(s, n))
                    throw internal_consistency_error("table sum mismatch at n=" +
                                                     std::to_string(n));
    });
    invariant("oriented = cycle-factor * husimi = 2^polygons * cacti, n <= 10", [&] {
        for (int n = 1; n <= 10; ++n)
            for (const auto& d : BlockSizeDistribution::all_for_vertex_count(n)) {
                Int factor = 1;
                for (size_t i = 0; i < d.counts().size(); ++i)
                    factor *= pow_int(factorial(static_cast<unsigned long>(i + 1)),
                                      d.counts()[i]);
                if (oriented_cacti_by_distribution(d) !=
                        factor * husimi_labeled_by_distribution(d) ||
                    oriented_cacti_by_distribution(d) !=
                        pow_int(Int(2), d.big_block_count()) * cacti_by_distribution(d))
                    throw internal_consistency_error("inter-formula identity fails for " +
                                                     d.str());
            }
    });
    invariant("lagrange inversion reproduces totals, n <= 10", [&] {
        for (Species s : {Species::husimi, Species::cactus, Species::oriented_cactus}) {
            auto kernel = lagrange_kernel(s, 10);
            for (int n = 1; n <= 10; ++n)
                if (Rat(Int(n) * labeled_total(s, n)) !=
                    Rat(factorial(static_cast<unsigned long>(n))) * lagrange_invert(kernel, n))
                    throw internal_consistency_error("lagrange route fails at n=" +
                                                     std::to_string(n));
        }
    });
    invariant("prufer codes round-trip, n <= 4", [&] {
        for (int n = 1; n <= 4; ++n)
            for (const auto& code : enumerate_codes(n))
                if (!(prufer_encode(prufer_decode(code, n)) == code))
                    throw internal_consistency_error("code round trip fails at n=" +
                                                     std::to_string(n));
    });

    if (opt.level == "full") {
        const int labeled_cap = std::min(opt.oracle_limit, 6);
        invariant("labelled formulas match the oracle, n <= " + std::to_string(labeled_cap), [&] {
            for (int n = 1; n <= labeled_cap; ++n)
                for (Species s :
                     {Species::husimi, Species::cactus, Species::oriented_cactus}) {
                    if (labeled_total(s, n) != count_labeled(s, n, opt.oracle_limit))
                        throw internal_consistency_error("labelled total mismatch");
                    auto oracle_rows = count_labeled_by_distribution(s, n, opt.oracle_limit);
                    for (const auto& [d, c] : distribution_table(s, n).rows)
                        if (oracle_rows[d.counts()] != c)
                            throw internal_consistency_error("distribution row mismatch");
                }
        });
        invariant("unlabelled series match the oracle", [&] {
            auto tri = triangular_cactus_series(9);
            for (int n = 1; n <= 9; ++n) {
                if (tri.rooted[n] != Rat(count_unlabeled_triangular(n, true)) ||
                    tri.unrooted[n] != Rat(count_unlabeled_triangular(n, false)))
                    throw internal_consistency_error("triangular mismatch at n=" +
                                                     std::to_string(n));
            }
            const int husimi_cap = std::min(opt.oracle_limit, 6);
            auto hu = husimi_series(husimi_cap);
            for (int n = 1; n <= husimi_cap; ++n)
                if (hu.rooted[n] != Rat(count_unlabeled(Species::husimi, n, opt.oracle_limit, true)) ||
                    hu.unrooted[n] != Rat(count_unlabeled(Species::husimi, n, opt.oracle_limit)))
                    throw internal_consistency_error("husimi mismatch at n=" + std::to_string(n));
        });
        invariant("prufer bijection over all husimi graphs, n <= 5", [&] {
            for (int n = 1; n <= std::min(opt.oracle_limit, 5); ++n) {
                enumerate_graphs(n, opt.oracle_limit, [&](const LabeledGraph& g) {
                    if (!is_connected(g) || !classify(g).husimi) return;
                    HusimiGraph h = husimi_from_graph(g);
                    if (!(prufer_decode(prufer_encode(h), n) == h))
                        throw internal_consistency_error("graph round trip fails at n=" +
                                                         std::to_string(n));
                });
            }
        });
        invariant("burnside equals canonical-form counting, n <= 5", [&] {
            for (int n = 1; n <= std::min(opt.oracle_limit, 5); ++n)
                if (burnside_unlabeled_count(Species::husimi, n, opt.oracle_limit) !=
                    count_unlabeled(Species::husimi, n, opt.oracle_limit))
                    throw internal_consistency_error("burnside mismatch at n=" +
                                                     std::to_string(n));
        });
        invariant("virial dual route agrees to 1e-12 at order 5", [&] {
            auto report =
                verify_density_fixed_point(std::min(opt.oracle_limit, 5), 30, opt.oracle_limit);
            if (!report.agree(1e-12))
                throw internal_consistency_error("virial dual route residual too large");
        });
        invariant("block multiplicativity exact, n <= 5", [&] {
            for (int n = 1; n <= std::min(opt.oracle_limit, 5); ++n)
                if (!block_multiplicativity_check(n, opt.oracle_limit).all_exact)
                    throw internal_consistency_error("block multiplicativity fails at n=" +
                                                     std::to_string(n));
        });
    }

    if (failures > 0) {
        std::cout << failures << " invariant(s) failed\n";
        return 4;
    }
    std::cout << "all invariants hold (" << opt.level << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of block-structured graphs and the soft-pair virial series"};
    app.require_subcommand(1);

    int default_limit = kDefaultOracleLimit;
    try {
        default_limit = oracle_limit_from_env();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }

    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "labelled species counts");
    count->add_option("species", count_opt.species, "husimi|cacti|oriented")
        ->required()
        ->check(CLI::IsMember({"husimi", "cacti", "cactus", "oriented"}));
    count->add_option("n", count_opt.n, "number of vertices")
        ->required()
        ->check(CLI::Range(1, 1000));
    count->add_flag("--by-distribution", count_opt.by_distribution,
                    "one row per block-size distribution");
    count->add_option("--format", count_opt.format, "tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}));

    UnlabeledOptions unlabeled_opt;
    auto* unlabeled = app.add_subcommand("unlabeled", "unlabelled counting series");
    unlabeled->add_option("species", unlabeled_opt.species, "triangular|husimi|oriented")
        ->required()
        ->check(CLI::IsMember({"triangular", "husimi", "oriented"}));
    unlabeled->add_option("N", unlabeled_opt.order, "series truncation order")
        ->check(CLI::Range(1, 64));
    unlabeled->add_option("--order", unlabeled_opt.order, "series truncation order")
        ->check(CLI::Range(1, 64));
    unlabeled->add_flag("--weighted", unlabeled_opt.weighted,
                        "cycle-size monomial breakdown (oriented only)");
    unlabeled->add_option("--format", unlabeled_opt.format, "tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}));

    PruferOptions prufer_opt;
    auto* prufer = app.add_subcommand("prufer", "block-forest encoding of husimi graphs");
    prufer->add_option("direction", prufer_opt.direction, "encode|decode")
        ->required()
        ->check(CLI::IsMember({"encode", "decode"}));
    prufer->add_option("input", prufer_opt.input,
                       "one line (otherwise lines are read from stdin)");

    VirialOptions virial_opt;
    auto* virial = app.add_subcommand("virial", "virial coefficients and dual-route check");
    virial->add_option("n_max", virial_opt.n_max, "largest coefficient order")
        ->check(CLI::Range(2, 11));
    virial->add_option("--order", virial_opt.n_max, "largest coefficient order")
        ->check(CLI::Range(2, 11));
    virial->add_option("--alpha", virial_opt.alpha,
                       "pair-potential width: 'pi', '4pi', or a decimal");
    virial->add_option("--precision", virial_opt.precision, "decimal digits")
        ->check(CLI::Range(1, 1000));
    virial->add_option("--oracle-limit", virial_opt.oracle_limit, "largest brute-force n")
        ->default_val(default_limit)
        ->check(CLI::Range(1, 11));

    OracleOptions oracle_opt;
    oracle_opt.oracle_limit = default_limit;
    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    oracle->add_option("species", oracle_opt.species, "husimi|cacti|oriented|triangular")
        ->required()
        ->check(CLI::IsMember({"husimi", "cacti", "cactus", "oriented", "triangular"}));
    oracle->add_option("n", oracle_opt.n, "number of vertices")
        ->required()
        ->check(CLI::Range(1, 11));
    oracle->add_flag("--unlabeled", oracle_opt.unlabeled, "count isomorphism classes");
    oracle->add_flag("--rooted", oracle_opt.rooted, "root at a vertex (with --unlabeled)");
    oracle->add_flag("--by-distribution", oracle_opt.by_distribution,
                     "one row per block-size distribution");
    oracle->add_option("--oracle-limit", oracle_opt.oracle_limit, "largest brute-force n")
        ->default_val(default_limit)
        ->check(CLI::Range(1, 11));
    oracle->add_option("--format", oracle_opt.format, "tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}));

    SelftestOptions selftest_opt;
    selftest_opt.oracle_limit = default_limit;
    auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
    selftest->add_option("--level", selftest_opt.level, "fast|full")
        ->check(CLI::IsMember({"fast", "full"}));
    selftest->add_option("--oracle-limit", selftest_opt.oracle_limit, "largest brute-force n")
        ->default_val(default_limit)
        ->check(CLI::Range(1, 11));
    selftest->add_flag("--inject-fault", selftest_opt.inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return run_count(count_opt);
        if (unlabeled->parsed()) return run_unlabeled(unlabeled_opt);
        if (prufer->parsed()) return run_prufer(prufer_opt);
        if (virial->parsed()) return run_virial(virial_opt);
        if (oracle->parsed()) return run_oracle(oracle_opt);
        if (selftest->parsed()) return run_selftest(selftest_opt);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const internal_consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
