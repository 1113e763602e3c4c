#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hampath/verifier.hpp"
#include "hampath/weighted_ladder.hpp"

namespace hampath {

/// Dense undirected graph as row bitsets; the clique solver's input.
struct BitGraph {
    int v = 0;
    int words = 0;
    std::vector<std::uint64_t> rows;

    explicit BitGraph(int vertices = 0);
    void add_edge(int a, int b);
    bool edge(int a, int b) const;
    const std::uint64_t* row(int a) const { return rows.data() + static_cast<std::size_t>(a) * words; }
};

/// Compatibility graph of all canonical Hamiltonian paths on n vertices
/// under a pairwise-union predicate.
struct CompatGraph {
    int n = 0;
    std::string predicate;
    std::vector<HamPath> paths;
    BitGraph adj;
};

/// All n!/2 canonical Hamiltonian paths in lexicographic order. Guarded
/// to n <= 8 unless allow_large is set.
std::vector<HamPath> enumerate_paths(int n, bool allow_large = false);

CompatGraph build_compat(int n, const PredicateSpec& predicate, bool allow_large = false);

struct MaxCliqueOptions {
    /// Node-expansion budget; exhaustion is a reported state, not an error.
    std::uint64_t node_budget = 50'000'000ull;
    /// Fix the first vertex and search its closed neighborhood only; sound
    /// when the graph is vertex-transitive, as relabeling-invariant
    /// compatibility graphs are.
    bool fix_root = false;
    /// Externally proven bound; the search stops exact once it is reached.
    int known_upper_bound = 0;
};

struct CliqueResult {
    int size = 0;
    std::vector<int> members;
    bool exact = false;
    std::uint64_t nodes = 0;
    int upper_bound = 0;
};

CliqueResult max_clique_bits(const BitGraph& g, const MaxCliqueOptions& opt = {});
CliqueResult max_clique(const CompatGraph& g, const MaxCliqueOptions& opt = {});

/// Exact maximum number of pairwise triangle-different g-type paths,
/// computed by brute enumeration plus clique search; the Z-swapping
/// expansion's 2^(ladder count) is expected to meet it.
int zswap_optimality_oracle(const ProperLadderedGraph& g);

/// One reproduction-table cell.
struct TableCell {
    int n = 0;
    int cycle = 0;
    CliqueResult result;
};

/// Renders cells in the reference layout: one row per cycle length,
/// one column per ground-set size; `*` marks budget-limited cells.
std::string render_table(const std::vector<TableCell>& cells);

}  // namespace hampath
