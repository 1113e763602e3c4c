#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "hampath/clique_search.hpp"
#include "hampath/graph_core.hpp"
#include "oracles.hpp"

using namespace hampath;

namespace {

EdgeSet union_of(std::vector<int> a, std::vector<int> b) {
    return path_edges(HamPath(std::move(a))) | path_edges(HamPath(std::move(b)));
}

std::vector<HamPath> random_paths(int n, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<HamPath> out;
    for (int i = 0; i < count; ++i) {
        std::shuffle(order.begin(), order.end(), rng);
        out.emplace_back(order);
    }
    return out;
}

}  // namespace

TEST_CASE("pair_index is a bijection onto 0..C(n,2)-1") {
    for (int n = 2; n <= 12; ++n) {
        std::set<int> seen;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                int idx = pair_index(u, v);
                CHECK(idx == pair_index(v, u));
                CHECK(idx >= 0);
                CHECK(idx < pair_count(n));
                CHECK(seen.insert(idx).second);
            }
        CHECK(static_cast<int>(seen.size()) == pair_count(n));
    }
}

TEST_CASE("path canonicalization identifies reversals") {
    HamPath p({2, 1, 0, 3});
    HamPath q({3, 0, 1, 2});
    CHECK(p == q);
    CHECK(p.order().front() < p.order().back());
    CHECK_THROWS_AS(HamPath({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(HamPath({0, 1, 3}), std::invalid_argument);
}

TEST_CASE("path_edges lists the consecutive pairs") {
    EdgeSet e = path_edges(HamPath({0, 1, 2}));
    CHECK(e.edge_count() == 2);
    CHECK(e.has(0, 1));
    CHECK(e.has(1, 2));
    CHECK_FALSE(e.has(0, 2));

    CHECK(path_edges(HamPath({0})).edge_count() == 0);

    EdgeSet f = path_edges(HamPath({0, 2, 1, 3}));
    CHECK(f.edge_count() == 3);
    CHECK(f.has(0, 2));
    CHECK(f.has(1, 2));
    CHECK(f.has(1, 3));
}

TEST_CASE("edge-set union is bitwise with exact popcount") {
    EdgeSet a(3), b(3);
    a.add(0, 1);
    b.add(1, 2);
    EdgeSet u = a | b;
    CHECK(u.edge_count() == 2);
    CHECK(u.has(0, 1));
    CHECK(u.has(1, 2));
    CHECK((a | a) == a);

    EdgeSet w = union_of({0, 1, 2}, {1, 0, 2});
    CHECK(w.edge_count() == 3);
    CHECK(w.has(0, 1));
    CHECK(w.has(1, 2));
    CHECK(w.has(0, 2));

    EdgeSet other(4);
    CHECK_THROWS_AS(a | other, std::invalid_argument);
}

TEST_CASE("triangle detection") {
    CHECK(contains_triangle(union_of({0, 1, 2}, {1, 0, 2})));
    CHECK_FALSE(contains_triangle(path_edges(HamPath({0, 3, 1, 4, 2}))));
    EdgeSet u = union_of({0, 1, 2, 3}, {0, 2, 1, 3});
    CHECK(contains_triangle(u));
    CHECK(oracle::has_triangle(u));
}

TEST_CASE("triangle detection agrees with the triple-scan oracle on random unions") {
    std::mt19937_64 rng(7);
    for (int n = 3; n <= 9; ++n) {
        auto paths = random_paths(n, 12, rng());
        for (std::size_t i = 0; i < paths.size(); ++i)
            for (std::size_t j = i + 1; j < paths.size(); ++j) {
                EdgeSet u = path_edges(paths[i]) | path_edges(paths[j]);
                CHECK(contains_triangle(u) == oracle::has_triangle(u));
            }
    }
}

TEST_CASE("fixed-length cycle detection") {
    EdgeSet square(4);
    square.add(0, 1);
    square.add(1, 2);
    square.add(2, 3);
    square.add(3, 0);
    CHECK(contains_cycle_of_length(square, 4));
    CHECK_FALSE(contains_cycle_of_length(square, 3));
    CHECK_THROWS_AS(contains_cycle_of_length(square, 2), std::invalid_argument);
    CHECK_THROWS_AS(contains_cycle_of_length(square, 5), std::invalid_argument);

    // Unions of short paths, frozen from the exhaustive oracle.
    EdgeSet u = union_of({0, 1, 2, 3, 4}, {1, 0, 2, 4, 3});
    for (int k = 3; k <= 5; ++k) CHECK(contains_cycle_of_length(u, k) == oracle::has_cycle_of_length(u, k));
    CHECK(contains_cycle_of_length(u, 3));
    CHECK_FALSE(contains_cycle_of_length(u, 5));

    EdgeSet v = union_of({0, 1, 2, 3, 4}, {0, 2, 4, 1, 3});
    CHECK(contains_cycle_of_length(v, 5));
    CHECK(oracle::has_cycle_of_length(v, 5));

    for (int k = 3; k <= 6; ++k)
        CHECK_FALSE(contains_cycle_of_length(path_edges(HamPath({0, 3, 1, 5, 2, 4})), k));
}

TEST_CASE("cycle detection agrees with the oracle on random unions") {
    std::mt19937_64 rng(11);
    for (int n = 4; n <= 7; ++n) {
        auto paths = random_paths(n, 8, rng());
        for (std::size_t i = 0; i < paths.size(); ++i)
            for (std::size_t j = i + 1; j < paths.size(); ++j) {
                EdgeSet u = path_edges(paths[i]) | path_edges(paths[j]);
                for (int k = 3; k <= n; ++k)
                    CHECK(contains_cycle_of_length(u, k) == oracle::has_cycle_of_length(u, k));
            }
    }
}

TEST_CASE("triangle equals cycle:3 on all small path unions") {
    // Exhaustive over every pair up to n = 5, sampled above.
    for (int n = 3; n <= 5; ++n) {
        auto paths = enumerate_paths(n);
        for (std::size_t i = 0; i < paths.size(); ++i)
            for (std::size_t j = i; j < paths.size(); ++j) {
                EdgeSet u = path_edges(paths[i]) | path_edges(paths[j]);
                CHECK(contains_triangle(u) == contains_cycle_of_length(u, 3));
            }
    }
    for (int n = 6; n <= 7; ++n) {
        auto paths = enumerate_paths(n);
        std::mt19937_64 rng(23 + n);
        for (int t = 0; t < 400; ++t) {
            const auto& a = paths[rng() % paths.size()];
            const auto& b = paths[rng() % paths.size()];
            EdgeSet u = path_edges(a) | path_edges(b);
            CHECK(contains_triangle(u) == contains_cycle_of_length(u, 3));
        }
    }
}

TEST_CASE("odd cycle detection") {
    CHECK(contains_odd_cycle(union_of({0, 1, 2}, {1, 0, 2})));
    CHECK_FALSE(contains_odd_cycle(path_edges(HamPath({0, 1, 2, 3, 4, 5}))));
    EdgeSet square(4);
    square.add(0, 1);
    square.add(1, 2);
    square.add(2, 3);
    square.add(3, 0);
    CHECK_FALSE(contains_odd_cycle(square));
}

TEST_CASE("triangle implies odd cycle on random unions") {
    std::mt19937_64 rng(5);
    for (int n = 3; n <= 10; ++n) {
        auto paths = random_paths(n, 10, rng());
        for (std::size_t i = 0; i < paths.size(); ++i)
            for (std::size_t j = i + 1; j < paths.size(); ++j) {
                EdgeSet u = path_edges(paths[i]) | path_edges(paths[j]);
                if (contains_triangle(u)) CHECK(contains_odd_cycle(u));
                CHECK(contains_odd_cycle(u) == oracle::has_odd_cycle(u));
            }
    }
}

TEST_CASE("hamiltonian cycle detection") {
    EdgeSet cyc(5);
    for (int i = 0; i < 5; ++i) cyc.add(i, (i + 1) % 5);
    CHECK(contains_hamiltonian_cycle(cyc));
    CHECK(contains_hamiltonian_cycle(union_of({0, 1, 2}, {1, 0, 2})));
    // A degree-one vertex rules a spanning cycle out.
    EdgeSet pend(4);
    pend.add(0, 1);
    pend.add(1, 2);
    pend.add(2, 3);
    pend.add(1, 3);
    CHECK(pend.degree(0) == 1);
    CHECK_FALSE(contains_hamiltonian_cycle(pend));
    CHECK_FALSE(contains_hamiltonian_cycle(path_edges(HamPath({0, 1, 2, 3}))));
}

TEST_CASE("max-degree-2 union of distinct paths is exactly a hamiltonian cycle") {
    for (int n = 4; n <= 6; ++n) {
        auto paths = enumerate_paths(n);
        for (std::size_t i = 0; i < paths.size(); ++i)
            for (std::size_t j = i + 1; j < paths.size(); ++j) {
                EdgeSet u = path_edges(paths[i]) | path_edges(paths[j]);
                int max_deg = 0;
                for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, u.degree(v));
                bool is_ham_cycle = contains_hamiltonian_cycle(u) && u.edge_count() == n;
                CHECK((max_deg <= 2) == is_ham_cycle);
            }
    }
}

TEST_CASE("paths are triangle- and odd-cycle-free") {
    std::mt19937_64 rng(31);
    for (int n = 1; n <= 16; ++n) {
        for (const auto& p : random_paths(n, 6, rng())) {
            EdgeSet e = path_edges(p);
            if (n >= 3) CHECK_FALSE(contains_triangle(e));
            CHECK_FALSE(contains_odd_cycle(e));
        }
    }
}

TEST_CASE("path bipartition alternates and is balanced") {
    Bipartition b = path_bipartition(HamPath({0, 1, 2}));
    CHECK(b.mask() == 0b010);
    CHECK(b.balanced());

    Bipartition c = path_bipartition(HamPath({0, 1, 2, 3}));
    CHECK(c.mask() == 0b1010);
    CHECK(c.balanced());

    // Same bipartition never yields an odd cycle in the union.
    HamPath p({0, 1, 2, 3, 4});
    HamPath q({0, 3, 2, 1, 4});
    REQUIRE(path_bipartition(p) == path_bipartition(q));
    CHECK_FALSE(contains_odd_cycle(path_edges(p) | path_edges(q)));
}

TEST_CASE("binomial matches the Pascal oracle and its examples") {
    CHECK(binomial(5, 2) == BigCount(10));
    CHECK(binomial(12, 0) == BigCount(1));
    CHECK(binomial(17, 8) == oracle::pascal_binomial(17, 8));
    CHECK(binomial(17, 8) == BigCount(24310));
    CHECK_THROWS_AS(binomial(4, 5), std::invalid_argument);
    for (int n = 0; n <= 40; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::pascal_binomial(n, k));
}

TEST_CASE("binomial satisfies Pascal's rule up to n = 40") {
    for (int n = 1; n <= 40; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("balanced bipartition counts match the mask-enumeration oracle") {
    for (int n = 1; n <= 20; ++n)
        CHECK(balanced_bipartition_count(n) == BigCount(oracle::balanced_bipartitions(n)));
    CHECK(balanced_bipartition_count(9) == BigCount(126));
    CHECK(balanced_bipartition_count(10) == BigCount(126));
}

TEST_CASE("big integers print and compare exactly") {
    BigCount a = binomial(64, 32);
    CHECK(a.str() == "1832624140942590534");
    BigCount b = binomial(81, 40);
    CHECK(b.str() == "212392290424395860814420");
    CHECK(b > a);
    CHECK(BigCount(0).str() == "0");
    BigCount two_pow_100 = BigCount(1);
    two_pow_100.shift_left(100);
    CHECK(two_pow_100.str() == "1267650600228229401496703205376");
    CHECK((BigCount(3) * BigCount(7)) == BigCount(21));
}
