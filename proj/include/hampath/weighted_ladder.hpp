#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hampath/big_count.hpp"
#include "hampath/graph_core.hpp"

namespace hampath {

/// Simple graph whose edges carry weight 1 or 2; an absent pair carries
/// no constraint. Weight w on {u,v} demands path-distance exactly w.
class WeightedGraph {
public:
    explicit WeightedGraph(int n) : weight1_(n), weight2_(n) {}

    int n() const { return weight1_.n(); }

    void set_weight(int u, int v, int w);
    /// 0 when the pair is unconstrained.
    int weight(int u, int v) const;

    const EdgeSet& weight1_edges() const { return weight1_; }
    const EdgeSet& weight2_edges() const { return weight2_; }

private:
    EdgeSet weight1_;
    EdgeSet weight2_;
};

/// True iff some pair carries weight 1 in one graph and weight 2 in the
/// other. Every g1-type path is then triangle-different from every
/// g2-type path.
bool weighted_compatible(const WeightedGraph& g1, const WeightedGraph& g2);

/// True iff every weighted pair of g sits at exactly its weight's
/// distance along h.
bool is_g_type(const HamPath& h, const WeightedGraph& g);

/// k rungs (v_i, w_i), top first. Rungs get weight 1, the two rails
/// (v_i,v_{i+1}) and (w_i,w_{i+1}) get weight 2.
struct LadderSpec {
    std::vector<std::pair<int, int>> rungs;

    int rung_count() const { return static_cast<int>(rungs.size()); }
    std::vector<int> vertices() const;
};

struct ResidualEmpty {
    bool operator==(const ResidualEmpty&) const = default;
};
struct ResidualSingleEdge {
    int u = 0, v = 0;
    bool operator==(const ResidualSingleEdge&) const = default;
};
/// Two vertex-disjoint weight-2 paths on m and m+2 vertices (m >= 1).
struct ResidualTwoPaths {
    std::vector<int> short_path;
    std::vector<int> long_path;
    bool operator==(const ResidualTwoPaths&) const = default;
};
using ResidualSpec = std::variant<ResidualEmpty, ResidualSingleEdge, ResidualTwoPaths>;

std::vector<int> residual_vertices(const ResidualSpec& r);

/// Disjoint union of ladders, an isolated apex vertex, and a residual
/// part, together covering {0,...,n-1}. The blueprint the Z-swapping
/// construction expands into 2^(ladder count) paths.
struct ProperLadderedGraph {
    int n = 0;
    int apex = 0;
    std::vector<LadderSpec> ladders;
    ResidualSpec residual = ResidualEmpty{};
};

/// std::nullopt when all structural invariants hold, otherwise a message
/// naming the first violated clause.
std::optional<std::string> validate(const ProperLadderedGraph& g);

/// The weighted graph a blueprint induces. Requires a valid blueprint.
WeightedGraph derived_weights(const ProperLadderedGraph& g);

/// Z-swapping construction: 2^l pairwise triangle-different g-type paths,
/// one per 0-1 sequence over the l ladders (bit i = 0 enters ladder i on
/// the v side). Output order follows the bit sequences 0,1,...,2^l-1.
std::vector<HamPath> z_swap(const ProperLadderedGraph& g);

/// Compatible family of blueprints on 2k+1 vertices, all containing the
/// matching {(1,2),...,(2k-1,2k)} with weight 2, apex 0, whose Z-swap
/// total is C(k, floor(k/2)).
struct MHFamily {
    int k = 0;
    int apex = 0;
    std::vector<std::pair<int, int>> matching;
    std::vector<ProperLadderedGraph> members;
    BigCount total_paths;
};

/// Hard-coded base families for k <= 3; k = 0 is the lone apex.
MHFamily mh_base(int k);

/// Invariant audit used by tests and the builder's internal assertions.
std::optional<std::string> mh_family_violation(const MHFamily& f);

}  // namespace hampath
