#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "hampath/clique_search.hpp"
#include "hampath/family_builder.hpp"

using namespace hampath;

namespace {

PredicateSpec triangle() { return PredicateSpec::parse("triangle"); }

BitGraph shuffled_copy(const BitGraph& g, std::uint64_t seed) {
    std::vector<int> perm(g.v);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    BitGraph out(g.v);
    for (int a = 0; a < g.v; ++a)
        for (int b = a + 1; b < g.v; ++b)
            if (g.edge(a, b)) out.add_edge(perm[a], perm[b]);
    return out;
}

}  // namespace

TEST_CASE("path enumeration counts n!/2 canonical paths in order") {
    CHECK(enumerate_paths(3).size() == 3);
    CHECK(enumerate_paths(4).size() == 12);
    CHECK(enumerate_paths(6).size() == 360);
    auto paths = enumerate_paths(5);
    CHECK(std::is_sorted(paths.begin(), paths.end()));
    for (const auto& p : paths) CHECK(p.order().front() < p.order().back());
    CHECK_THROWS_AS(enumerate_paths(9), std::invalid_argument);
    CHECK(enumerate_paths(9, true).size() == 181440);
}

TEST_CASE("compatibility graph on three vertices is complete") {
    CompatGraph g = build_compat(3, triangle());
    REQUIRE(g.paths.size() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) CHECK(g.adj.edge(i, j));
}

TEST_CASE("reference clique numbers at n = 4 and 5") {
    CHECK(max_clique(build_compat(4, triangle())).size == 3);
    CHECK(max_clique(build_compat(4, PredicateSpec::parse("cycle:4"))).size == 6);
    CHECK(max_clique(build_compat(5, triangle())).size == 10);
    CHECK(max_clique(build_compat(5, PredicateSpec::parse("cycle:5"))).size == 10);
    CliqueResult c54 = max_clique(build_compat(5, PredicateSpec::parse("cycle:4")));
    CHECK(c54.exact);
    CHECK(c54.size >= 12);
}

TEST_CASE("clique size is invariant under vertex shuffling") {
    for (int n = 3; n <= 5; ++n) {
        CompatGraph g = build_compat(n, triangle());
        CliqueResult base = max_clique(g);
        for (std::uint64_t seed : {3ull, 17ull}) {
            BitGraph s = shuffled_copy(g.adj, seed);
            CHECK(max_clique_bits(s).size == base.size);
        }
    }
}

TEST_CASE("odd-cycle-forcing cliques respect the balanced-bipartition ceiling") {
    for (int n = 3; n <= 5; ++n) {
        for (const char* pred : {"triangle", "odd-cycle"}) {
            CliqueResult r = max_clique(build_compat(n, PredicateSpec::parse(pred)));
            REQUIRE(r.exact);
            CHECK(BigCount(static_cast<std::uint64_t>(r.size)) <= balanced_bipartition_count(n));
        }
    }
}

TEST_CASE("hamiltonian-cycle cliques respect the C(n,2) ceiling") {
    for (int n = 4; n <= 5; ++n) {
        CliqueResult r = max_clique(build_compat(n, PredicateSpec::parse("ham-cycle")));
        REQUIRE(r.exact);
        CHECK(BigCount(static_cast<std::uint64_t>(r.size)) <= binomial(n, 2));
    }
}

TEST_CASE("witness cliques re-verify in full mode") {
    CompatGraph g = build_compat(5, triangle());
    CliqueResult r = max_clique(g);
    REQUIRE(r.size == 10);
    std::vector<HamPath> fam;
    for (int idx : r.members) fam.push_back(g.paths[idx]);
    CHECK(verify_pairwise(fam, triangle()).pass());
}

TEST_CASE("root-fixed search matches the unreduced optimum") {
    for (int n = 3; n <= 5; ++n) {
        for (const char* pred : {"triangle", "cycle:4", "ham-cycle"}) {
            if (n < 4 && std::string(pred) == "cycle:4") continue;
            CompatGraph g = build_compat(n, PredicateSpec::parse(pred));
            MaxCliqueOptions fixed;
            fixed.fix_root = true;
            CHECK(max_clique(g, fixed).size == max_clique(g).size);
        }
    }
}

TEST_CASE("budget exhaustion reports an incomplete state with a sound bound") {
    // Dense seeded random graph; the coloring bound cannot close this at
    // the root, so a tiny budget must surface as an incomplete result.
    BitGraph g(120);
    std::uint64_t state = 99;
    auto next = [&state] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int a = 0; a < g.v; ++a)
        for (int b = a + 1; b < g.v; ++b)
            if (next() % 10 < 7) g.add_edge(a, b);

    MaxCliqueOptions tiny;
    tiny.node_budget = 20;
    CliqueResult r = max_clique_bits(g, tiny);
    CHECK_FALSE(r.exact);
    CHECK(r.size >= 1);
    CHECK(r.upper_bound >= r.size);
    CHECK(r.nodes >= tiny.node_budget);

    // The incumbent is still a clique, and the exact run confirms it as a
    // lower bound.
    for (std::size_t i = 0; i < r.members.size(); ++i)
        for (std::size_t j = i + 1; j < r.members.size(); ++j)
            CHECK(g.edge(r.members[i], r.members[j]));
    CliqueResult full = max_clique_bits(g);
    CHECK(full.exact);
    CHECK(full.size >= r.size);
    CHECK(full.size <= r.upper_bound);
}

TEST_CASE("a proven external ceiling lets the search stop exactly at it") {
    CompatGraph g = build_compat(5, triangle());
    MaxCliqueOptions opt;
    opt.known_upper_bound = 10;
    CliqueResult r = max_clique(g, opt);
    CHECK(r.exact);
    CHECK(r.size == 10);
}

TEST_CASE("z-swap optimality oracle on the base blueprints") {
    auto f1 = mh_base(1);
    auto f2 = mh_base(2);
    auto f3 = mh_base(3);
    CHECK(zswap_optimality_oracle(f1.members[0]) == 1);
    CHECK(zswap_optimality_oracle(f2.members[0]) == 2);
    CHECK(zswap_optimality_oracle(f3.members[0]) == 2);
    CHECK(zswap_optimality_oracle(f3.members[1]) == 1);
}

TEST_CASE("table rendering marks inexact cells") {
    TableCell a{3, 3, {}};
    a.result.size = 3;
    a.result.exact = true;
    TableCell b{4, 3, {}};
    b.result.size = 3;
    b.result.exact = false;
    std::string table = render_table({a, b});
    CHECK(table.find("3-cycle") != std::string::npos);
    CHECK(table.find("3*") != std::string::npos);
}
