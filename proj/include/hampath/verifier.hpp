#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hampath/graph_core.hpp"

namespace hampath {

/// Union predicate a verified family must satisfy on every pair.
struct PredicateSpec {
    enum class Kind { Triangle, OddCycle, CycleK, HamCycle };
    Kind kind = Kind::Triangle;
    int k = 0;  // CycleK only

    /// Accepts "triangle", "odd-cycle", "cycle:K" and "ham-cycle".
    static PredicateSpec parse(const std::string& text);
    std::string name() const;

    bool evaluate(int n, std::span<const std::uint64_t> union_rows) const;
    bool evaluate(const EdgeSet& union_edges) const;
};

struct VerifyMode {
    bool sampled = false;
    std::uint64_t sample_pairs = 0;
    std::uint64_t seed = 0;

    static VerifyMode full() { return {}; }
    static VerifyMode sample(std::uint64_t pairs, std::uint64_t seed) {
        return {true, pairs, seed};
    }
};

struct PairFailure {
    std::size_t i = 0, j = 0;
    std::string reason;
};

struct VerifyReport {
    std::size_t family_size = 0;
    std::string predicate;
    std::string mode;  // "full" or "sample:N"
    std::uint64_t seed = 0;
    std::uint64_t pairs_checked = 0;
    std::vector<PairFailure> failures;
    bool bipartition_injective = false;
    double elapsed_seconds = 0.0;

    bool pass() const { return failures.empty(); }
    std::string text() const;
    nlohmann::json json() const;
};

/// Checks every unordered pair in full mode, or `sample_pairs` distinct
/// seeded uniform pairs otherwise (degrades to full coverage when the
/// request meets or exceeds C(size,2)). Duplicate paths are verification
/// failures, not errors; mixed vertex counts are errors.
VerifyReport verify_pairwise(const std::vector<HamPath>& family, const PredicateSpec& predicate,
                             const VerifyMode& mode = VerifyMode::full());

/// Optimality certificate for odd-cycle-forcing predicates: all
/// bipartitions balanced and pairwise distinct, family size equal to the
/// balanced-bipartition number.
struct TightnessResult {
    bool pass = false;
    std::string detail;
};
TightnessResult certify_tightness(const std::vector<HamPath>& family);

/// The mechanism behind the C(n,2) bound for Hamiltonian-cycle-different
/// families: the 2|family| inward-directed terminal edges must be
/// pairwise distinct.
struct EndEdgeResult {
    bool pass = false;
    std::string detail;
};
EndEdgeResult end_edge_injectivity(const std::vector<HamPath>& family);

}  // namespace hampath
