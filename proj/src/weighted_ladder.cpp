#include "hampath/weighted_ladder.hpp"

#include <algorithm>
#include <stdexcept>

namespace hampath {

void WeightedGraph::set_weight(int u, int v, int w) {
    if (w != 1 && w != 2) throw std::invalid_argument("WeightedGraph: weight must be 1 or 2");
    int old = weight(u, v);
    if (old != 0 && old != w) throw std::invalid_argument("WeightedGraph: conflicting weights on a pair");
    if (w == 1)
        weight1_.add(u, v);
    else
        weight2_.add(u, v);
}

int WeightedGraph::weight(int u, int v) const {
    if (weight1_.has(u, v)) return 1;
    if (weight2_.has(u, v)) return 2;
    return 0;
}

bool weighted_compatible(const WeightedGraph& g1, const WeightedGraph& g2) {
    if (g1.n() != g2.n()) throw std::invalid_argument("weighted_compatible: size mismatch");
    for (auto [u, v] : g1.weight1_edges().edges())
        if (g2.weight(u, v) == 2) return true;
    for (auto [u, v] : g1.weight2_edges().edges())
        if (g2.weight(u, v) == 1) return true;
    return false;
}

bool is_g_type(const HamPath& h, const WeightedGraph& g) {
    if (h.n() != g.n()) return false;
    std::vector<int> pos(h.n());
    for (int i = 0; i < h.n(); ++i) pos[h.order()[i]] = i;
    auto distance_ok = [&](const EdgeSet& es, int w) {
        for (auto [u, v] : es.edges())
            if (std::abs(pos[u] - pos[v]) != w) return false;
        return true;
    };
    return distance_ok(g.weight1_edges(), 1) && distance_ok(g.weight2_edges(), 2);
}

std::vector<int> LadderSpec::vertices() const {
    std::vector<int> out;
    out.reserve(2 * rungs.size());
    for (auto [v, w] : rungs) {
        out.push_back(v);
        out.push_back(w);
    }
    return out;
}

std::vector<int> residual_vertices(const ResidualSpec& r) {
    std::vector<int> out;
    std::visit(
        [&](const auto& part) {
            using T = std::decay_t<decltype(part)>;
            if constexpr (std::is_same_v<T, ResidualSingleEdge>) {
                out = {part.u, part.v};
            } else if constexpr (std::is_same_v<T, ResidualTwoPaths>) {
                out = part.short_path;
                out.insert(out.end(), part.long_path.begin(), part.long_path.end());
            }
        },
        r);
    return out;
}

std::optional<std::string> validate(const ProperLadderedGraph& g) {
    if (g.n < 1 || g.n > kMaxVertices) return "vertex count out of range";
    if (g.n % 2 == 0) return "vertex count must be odd";

    auto in_range = [&](int v) { return v >= 0 && v < g.n; };
    if (!in_range(g.apex)) return "apex out of range";

    std::vector<int> all{g.apex};
    for (const auto& lad : g.ladders) {
        if (lad.rungs.empty()) return "ladder with no rungs";
        auto verts = lad.vertices();
        all.insert(all.end(), verts.begin(), verts.end());
    }

    if (const auto* e = std::get_if<ResidualSingleEdge>(&g.residual)) {
        if (e->u == e->v) return "residual edge endpoints coincide";
    } else if (const auto* tp = std::get_if<ResidualTwoPaths>(&g.residual)) {
        if (tp->short_path.empty()) return "residual short path empty";
        if (tp->long_path.size() != tp->short_path.size() + 2)
            return "residual path sizes must differ by exactly 2";
    }
    auto res = residual_vertices(g.residual);
    all.insert(all.end(), res.begin(), res.end());

    for (int v : all)
        if (!in_range(v)) return "vertex out of range";
    if (static_cast<int>(all.size()) != g.n) return "vertex sets do not cover the ground set";
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return "apex, ladders and residual must be disjoint";

    try {
        derived_weights(g);
    } catch (const std::invalid_argument& e) {
        return std::string("inconsistent weights: ") + e.what();
    }
    return std::nullopt;
}

WeightedGraph derived_weights(const ProperLadderedGraph& g) {
    WeightedGraph out(g.n);
    for (const auto& lad : g.ladders) {
        for (std::size_t i = 0; i < lad.rungs.size(); ++i) {
            auto [v, w] = lad.rungs[i];
            out.set_weight(v, w, 1);
            if (i + 1 < lad.rungs.size()) {
                out.set_weight(v, lad.rungs[i + 1].first, 2);
                out.set_weight(w, lad.rungs[i + 1].second, 2);
            }
        }
    }
    std::visit(
        [&](const auto& part) {
            using T = std::decay_t<decltype(part)>;
            if constexpr (std::is_same_v<T, ResidualSingleEdge>) {
                out.set_weight(part.u, part.v, 2);
            } else if constexpr (std::is_same_v<T, ResidualTwoPaths>) {
                for (const auto* path : {&part.short_path, &part.long_path})
                    for (std::size_t i = 1; i < path->size(); ++i)
                        out.set_weight((*path)[i - 1], (*path)[i], 2);
            }
        },
        g.residual);
    return out;
}

std::vector<HamPath> z_swap(const ProperLadderedGraph& g) {
    if (auto err = validate(g)) throw std::invalid_argument("z_swap: " + *err);

    // Shared prefix through the residual part and the apex.
    std::vector<int> prefix;
    std::visit(
        [&](const auto& part) {
            using T = std::decay_t<decltype(part)>;
            if constexpr (std::is_same_v<T, ResidualEmpty>) {
                prefix = {g.apex};
            } else if constexpr (std::is_same_v<T, ResidualSingleEdge>) {
                prefix = {part.u, g.apex, part.v};
            } else {
                // y_1 x_1 y_2 x_2 ... y_m x_m y_{m+1} apex y_{m+2}
                const auto& s = part.short_path;
                const auto& l = part.long_path;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    prefix.push_back(l[i]);
                    prefix.push_back(s[i]);
                }
                prefix.push_back(l[s.size()]);
                prefix.push_back(g.apex);
                prefix.push_back(l[s.size() + 1]);
            }
        },
        g.residual);

    int l = static_cast<int>(g.ladders.size());
    std::vector<HamPath> out;
    out.reserve(std::size_t{1} << l);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << l); ++bits) {
        std::vector<int> order = prefix;
        for (int i = 0; i < l; ++i) {
            bool swapped = (bits >> i) & 1;
            for (auto [v, w] : g.ladders[i].rungs) {
                order.push_back(swapped ? w : v);
                order.push_back(swapped ? v : w);
            }
        }
        out.emplace_back(std::move(order));
    }
    return out;
}

MHFamily mh_base(int k) {
    if (k < 0 || k > 3) throw std::invalid_argument("mh_base: only k <= 3 is hard-coded");
    MHFamily f;
    f.k = k;
    f.apex = 0;
    for (int i = 1; i <= k; ++i) f.matching.emplace_back(2 * i - 1, 2 * i);
    switch (k) {
        case 0:
            f.members.push_back({1, 0, {}, ResidualEmpty{}});
            break;
        case 1:
            f.members.push_back({3, 0, {}, ResidualSingleEdge{1, 2}});
            break;
        case 2:
            f.members.push_back({5, 0, {LadderSpec{{{1, 3}, {2, 4}}}}, ResidualEmpty{}});
            break;
        case 3:
            f.members.push_back({7, 0, {LadderSpec{{{1, 3}, {2, 4}}}}, ResidualSingleEdge{5, 6}});
            f.members.push_back({7, 0, {}, ResidualTwoPaths{{5, 6}, {1, 2, 4, 3}}});
            break;
    }
    f.total_paths = BigCount(0);
    for (const auto& m : f.members) f.total_paths += BigCount(1).shift_left(static_cast<unsigned>(m.ladders.size()));
    return f;
}

std::optional<std::string> mh_family_violation(const MHFamily& f) {
    if (f.k < 0) return "negative k";
    int n = 2 * f.k + 1;
    if (f.apex != 0) return "apex must be vertex 0";
    if (static_cast<int>(f.matching.size()) != f.k) return "matching size must equal k";
    for (int i = 1; i <= f.k; ++i)
        if (f.matching[i - 1] != std::pair{2 * i - 1, 2 * i}) return "matching must be (1,2),...,(2k-1,2k)";
    if (f.members.empty()) return "no members";

    std::vector<WeightedGraph> derived;
    BigCount total(0);
    for (const auto& m : f.members) {
        if (m.n != n) return "member on wrong ground set";
        if (m.apex != f.apex) return "member apex differs from family apex";
        if (auto err = validate(m)) return "invalid member: " + *err;
        derived.push_back(derived_weights(m));
        for (auto [u, v] : f.matching)
            if (derived.back().weight(u, v) != 2) return "matching edge missing weight 2 in a member";
        total += BigCount(1).shift_left(static_cast<unsigned>(m.ladders.size()));
    }
    for (std::size_t i = 0; i < derived.size(); ++i)
        for (std::size_t j = i + 1; j < derived.size(); ++j)
            if (!weighted_compatible(derived[i], derived[j])) return "members not pairwise compatible";
    if (total != binomial(f.k, f.k / 2)) return "Z-swap total differs from C(k, floor(k/2))";
    if (f.total_paths != total) return "stored total_paths differs from ladder-count sum";
    return std::nullopt;
}

}  // namespace hampath
