#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hampath/weighted_ladder.hpp"

namespace hampath {

/// Exact check of
///   sum_{k=0}^{n} C(n,k) C(k,floor(k/2)) 2^(n-k) == C(2n+1,n).
bool identity_check(int n);

/// Compatible family of blueprints whose Z-swap total is the balanced
/// bipartition number of n. For even n the members live on n-1 vertices
/// and `extended` records that each expanded path gets one extra edge.
struct HFamily {
    int n = 0;
    bool extended = false;
    std::vector<ProperLadderedGraph> members;
    BigCount total_paths;
};

/// Assembles the family on 2n+1 vertices from one MH-maximal family per
/// submatching of the ground matching {(1,2),...,(2n-1,2n)}, apex 0.
HFamily mh_to_h(int n, const std::function<MHFamily(int)>& mh_supplier);

/// Doubles a ladder: every rung spawns its primed twin next to it and
/// each rail segment keeps exactly one of its two copies, alternating
/// primed/unprimed from the top (primed first).
LadderSpec transform_ladder(const LadderSpec& ladder, const std::function<int(int)>& prime);

/// Doubles each residual path into the primed/unprimed zigzag and turns
/// the old apex into the weight-2 pair appended to the shorter path.
ResidualSpec transform_residual(const ResidualSpec& residual, int old_apex,
                                const std::function<int(int)>& prime);

/// MH-maximal family on 2k+1 vertices for any k >= 0 (base families for
/// k <= 3, the doubling induction above that). Memoized internally.
MHFamily build_mh(int k);

/// H-maximal family targeting n vertices; handles both parities.
HFamily build_h_family(int n);

/// Apply a vertex relabeling to a blueprint (ground-set size unchanged
/// unless `new_n` is given).
ProperLadderedGraph relabel(const ProperLadderedGraph& g, std::span<const int> map, int new_n);

/// A maximum family of pairwise triangle-different Hamiltonian paths on
/// n vertices, of size equal to the balanced bipartition number of n.
std::vector<HamPath> construct_triangle_family(int n);

}  // namespace hampath
