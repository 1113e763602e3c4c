#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hampath/big_count.hpp"

namespace hampath {

/// Hard ceiling on ground-set sizes: one machine word per adjacency row
/// and per bipartition side mask.
inline constexpr int kMaxVertices = 64;

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Fixed index of the unordered pair {u,v}: index = max*(max-1)/2 + min.
/// The numbering is pinned; sampling ranks and edge codes depend on it.
constexpr int pair_index(int u, int v) {
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
}

/// Simple undirected graph as a bit vector over the C(n,2) unordered pairs.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int n);

    int n() const { return n_; }
    int edge_count() const { return count_; }

    bool has(int u, int v) const;
    /// Inserts {u,v}; returns false if the edge was already present.
    bool add(int u, int v);

    EdgeSet operator|(const EdgeSet& rhs) const;

    std::vector<std::pair<int, int>> edges() const;
    int degree(int u) const;

    /// Writes one neighborhood bitmask per vertex into rows[0..n-1].
    void fill_adjacency(std::span<std::uint64_t> rows) const;

    bool operator==(const EdgeSet&) const = default;

private:
    void check_pair(int u, int v) const;
    int n_ = 0;
    int count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Two-coloring of the vertex set, canonicalized so vertex 0 is on side A
/// (bit clear). A Hamiltonian path induces one by alternation.
class Bipartition {
public:
    Bipartition(int n, std::uint64_t side_mask);

    int n() const { return n_; }
    std::uint64_t mask() const { return side_; }
    bool balanced() const;

    bool operator==(const Bipartition&) const = default;
    auto operator<=>(const Bipartition&) const = default;

private:
    int n_ = 0;
    std::uint64_t side_ = 0;
};

/// Hamiltonian path on {0,...,n-1}, stored as the visiting order and
/// identified with its reversal: canonical form has order[0] < order[n-1].
class HamPath {
public:
    explicit HamPath(std::vector<int> order);

    int n() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }

    bool operator==(const HamPath&) const = default;
    auto operator<=>(const HamPath&) const = default;

private:
    std::vector<int> order_;
};

EdgeSet path_edges(const HamPath& p);
Bipartition path_bipartition(const HamPath& p);

bool contains_triangle(const EdgeSet& g);
bool contains_cycle_of_length(const EdgeSet& g, int k);
bool contains_odd_cycle(const EdgeSet& g);
bool contains_hamiltonian_cycle(const EdgeSet& g);

/// Row-level variants shared by the verifier's hot loop; rows[u] is the
/// neighborhood bitmask of u.
bool triangle_in_rows(int n, std::span<const std::uint64_t> rows);
bool cycle_of_length_in_rows(int n, std::span<const std::uint64_t> rows, int k);
bool odd_cycle_in_rows(int n, std::span<const std::uint64_t> rows);
bool hamiltonian_cycle_in_rows(int n, std::span<const std::uint64_t> rows);

}  // namespace hampath
