#pragma once

#include <cstdint>
#include <vector>

#include "hampath/graph_core.hpp"

namespace hampath {

bool is_prime(int p);

/// C(p,2) pairwise Hamiltonian-cycle-different paths on a prime ground
/// set: for every edge length and every omitted edge of that length, the
/// path walking the rest of the length class's circulant cycle.
std::vector<HamPath> hc_prime_family(int p);

/// 2^(n-1) - 1 pairwise triangle-different spanning trees, built by the
/// leaf-doubling recursion plus the star at each new vertex.
std::vector<EdgeSet> tree_family(int n);

/// Exhaustive classification of all labeled n-vertex graphs into
/// triangle-containing and maximal triangle-free; their union is the
/// largest family with a triangle in every pairwise union.
struct UnionFamilyCounts {
    std::uint64_t triangle_containing = 0;
    std::uint64_t maximal_triangle_free = 0;
    std::uint64_t total = 0;
};
UnionFamilyCounts union_family_size(int n);

}  // namespace hampath
