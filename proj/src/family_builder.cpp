#include "hampath/family_builder.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace hampath {

bool identity_check(int n) {
    if (n < 0) throw std::invalid_argument("identity_check: need n >= 0");
    BigCount lhs(0);
    for (int k = 0; k <= n; ++k) {
        BigCount term = binomial(n, k) * binomial(k, k / 2);
        term.shift_left(static_cast<unsigned>(n - k));
        lhs += term;
    }
    return lhs == binomial(2 * n + 1, n);
}

ProperLadderedGraph relabel(const ProperLadderedGraph& g, std::span<const int> map, int new_n) {
    ProperLadderedGraph out;
    out.n = new_n;
    out.apex = map[g.apex];
    for (const auto& lad : g.ladders) {
        LadderSpec nl;
        for (auto [v, w] : lad.rungs) nl.rungs.emplace_back(map[v], map[w]);
        out.ladders.push_back(std::move(nl));
    }
    std::visit(
        [&](const auto& part) {
            using T = std::decay_t<decltype(part)>;
            if constexpr (std::is_same_v<T, ResidualEmpty>) {
                out.residual = ResidualEmpty{};
            } else if constexpr (std::is_same_v<T, ResidualSingleEdge>) {
                out.residual = ResidualSingleEdge{map[part.u], map[part.v]};
            } else {
                ResidualTwoPaths tp;
                for (int v : part.short_path) tp.short_path.push_back(map[v]);
                for (int v : part.long_path) tp.long_path.push_back(map[v]);
                out.residual = std::move(tp);
            }
        },
        g.residual);
    return out;
}

HFamily mh_to_h(int n, const std::function<MHFamily(int)>& mh_supplier) {
    if (n < 0) throw std::invalid_argument("mh_to_h: need n >= 0");
    HFamily out;
    out.n = 2 * n + 1;
    out.total_paths = BigCount(0);

    // Ground matching B = {(1,2),(3,4),...,(2n-1,2n)}, apex 0. One family
    // per submatching, encoded as a bitmask over B's edges.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        int j = std::popcount(mask);
        MHFamily mh = mh_supplier(j);
        if (mh.k != j) throw std::runtime_error("mh_to_h: supplier returned family of wrong size");

        // Order-preserving map of the canonical family onto {0} + V(M).
        std::vector<int> map(2 * j + 1);
        map[0] = 0;
        int t = 1;
        for (int i = 0; i < n; ++i) {
            if ((mask >> i) & 1) {
                map[t++] = 2 * i + 1;
                map[t++] = 2 * i + 2;
            }
        }

        for (const auto& member : mh.members) {
            ProperLadderedGraph g = relabel(member, map, 2 * n + 1);
            for (int i = 0; i < n; ++i)
                if (!((mask >> i) & 1))
                    g.ladders.push_back(LadderSpec{{{2 * i + 1, 2 * i + 2}}});
            out.total_paths += BigCount(1).shift_left(static_cast<unsigned>(g.ladders.size()));
            out.members.push_back(std::move(g));
        }
    }

    if (out.total_paths != binomial(2 * n + 1, n))
        throw std::runtime_error("mh_to_h: path count does not match C(2n+1,n)");
    return out;
}

LadderSpec transform_ladder(const LadderSpec& ladder, const std::function<int(int)>& prime) {
    if (ladder.rungs.empty()) throw std::invalid_argument("transform_ladder: empty ladder");
    LadderSpec out;
    out.rungs.reserve(2 * ladder.rungs.size());
    for (std::size_t i = 0; i < ladder.rungs.size(); ++i) {
        auto [v, w] = ladder.rungs[i];
        std::pair<int, int> unprimed{v, w};
        std::pair<int, int> primed{prime(v), prime(w)};
        if (i % 2 == 0) {
            out.rungs.push_back(unprimed);
            out.rungs.push_back(primed);
        } else {
            out.rungs.push_back(primed);
            out.rungs.push_back(unprimed);
        }
    }
    return out;
}

namespace {

// x_1 x'_1 x'_2 x_2 x_3 x'_3 ... : matching edges stitch the primed and
// unprimed copies, the i-th original edge survives on the primed side
// for odd i and on the unprimed side for even i.
std::vector<int> zigzag(const std::vector<int>& path, const std::function<int(int)>& prime) {
    if (path.empty()) throw std::invalid_argument("transform_residual: empty residual path");
    std::vector<int> out;
    out.reserve(2 * path.size());
    out.push_back(path[0]);
    out.push_back(prime(path[0]));
    bool on_primed_side = true;
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (on_primed_side) {
            out.push_back(prime(path[i]));
            out.push_back(path[i]);
        } else {
            out.push_back(path[i]);
            out.push_back(prime(path[i]));
        }
        on_primed_side = !on_primed_side;
    }
    return out;
}

}  // namespace

ResidualSpec transform_residual(const ResidualSpec& residual, int old_apex,
                                const std::function<int(int)>& prime) {
    ResidualSpec out;
    std::visit(
        [&](const auto& part) {
            using T = std::decay_t<decltype(part)>;
            if constexpr (std::is_same_v<T, ResidualEmpty>) {
                out = ResidualSingleEdge{old_apex, prime(old_apex)};
            } else if constexpr (std::is_same_v<T, ResidualSingleEdge>) {
                out = ResidualTwoPaths{{old_apex, prime(old_apex)},
                                       zigzag({part.u, part.v}, prime)};
            } else {
                ResidualTwoPaths tp;
                tp.short_path = zigzag(part.short_path, prime);
                tp.short_path.push_back(old_apex);
                tp.short_path.push_back(prime(old_apex));
                tp.long_path = zigzag(part.long_path, prime);
                out = std::move(tp);
            }
        },
        residual);
    return out;
}

namespace {

// Transform of one blueprint on k_old vertices into one on 2*k_old + 1:
// primed copy of x is x + k_old, the fresh apex is 2*k_old.
ProperLadderedGraph double_member(const ProperLadderedGraph& g) {
    int k_old = g.n;
    auto prime = [k_old](int v) { return v + k_old; };
    ProperLadderedGraph out;
    out.n = 2 * k_old + 1;
    out.apex = 2 * k_old;
    for (const auto& lad : g.ladders) out.ladders.push_back(transform_ladder(lad, prime));
    out.residual = transform_residual(g.residual, g.apex, prime);
    return out;
}

// Relabel {x_1..x_m, x'_1..x'_m, extras..., apex} to the canonical form
// apex -> 0, x_i -> 2i-1, x'_i -> 2i, extras after the primed block.
std::vector<int> canonical_map(int m, int extras) {
    int total = 2 * m + 1 + extras;
    std::vector<int> map(total);
    for (int v = 0; v < m; ++v) {
        map[v] = 2 * v + 1;
        map[m + v] = 2 * v + 2;
    }
    for (int e = 0; e < extras; ++e) map[2 * m + e] = 2 * m + 1 + e;
    map[total - 1] = 0;
    return map;
}

// Folds the residual part plus the fresh pair (xk, xpk) into one ladder:
// the long path and the extended short path become the rails, the rung
// farthest from the fresh vertices becomes the top.
LadderSpec complete_residual(const ResidualSpec& residual, int xk, int xpk) {
    std::vector<int> long_path, ext_short{xpk, xk};
    if (const auto* e = std::get_if<ResidualSingleEdge>(&residual)) {
        long_path = {e->u, e->v};
    } else if (const auto* tp = std::get_if<ResidualTwoPaths>(&residual)) {
        long_path = tp->long_path;
        ext_short.insert(ext_short.end(), tp->short_path.begin(), tp->short_path.end());
    } else {
        throw std::logic_error("complete_residual: empty residual cannot occur here");
    }
    LadderSpec lad;
    for (std::size_t i = long_path.size(); i-- > 0;)
        lad.rungs.emplace_back(long_path[i], ext_short[i]);
    return lad;
}

MHFamily build_mh_cached(int k, std::map<int, MHFamily>& memo);

HFamily build_h_cached(int n, std::map<int, MHFamily>& memo) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("H-family ground set must be odd");
    return mh_to_h((n - 1) / 2, [&memo](int j) { return build_mh_cached(j, memo); });
}

MHFamily build_mh_cached(int k, std::map<int, MHFamily>& memo) {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    MHFamily out;
    if (k <= 3) {
        out = mh_base(k);
    } else if (k % 2 == 1) {
        HFamily h = build_h_cached(k, memo);
        auto map = canonical_map(k, 0);
        out.k = k;
        out.apex = 0;
        for (int i = 1; i <= k; ++i) out.matching.emplace_back(2 * i - 1, 2 * i);
        out.total_paths = BigCount(0);
        for (const auto& member : h.members) {
            ProperLadderedGraph g = relabel(double_member(member), map, 2 * k + 1);
            out.total_paths += BigCount(1).shift_left(static_cast<unsigned>(g.ladders.size()));
            out.members.push_back(std::move(g));
        }
        if (out.total_paths != h.total_paths)
            throw std::runtime_error("build_mh: odd step must preserve the path count");
    } else {
        HFamily h = build_h_cached(k - 1, memo);
        // Fresh pair (x_k, x'_k) sits after the primed block, before the apex.
        int xk = 2 * (k - 1), xpk = 2 * (k - 1) + 1;
        auto map = canonical_map(k - 1, 2);
        out.k = k;
        out.apex = 0;
        for (int i = 1; i <= k; ++i) out.matching.emplace_back(2 * i - 1, 2 * i);
        out.total_paths = BigCount(0);
        for (const auto& member : h.members) {
            ProperLadderedGraph g = double_member(member);
            g.n = 2 * k + 1;
            g.apex = 2 * k;  // apex id shifts up to make room for the fresh pair
            g.ladders.push_back(complete_residual(g.residual, xk, xpk));
            g.residual = ResidualEmpty{};
            g = relabel(g, map, 2 * k + 1);
            out.total_paths += BigCount(1).shift_left(static_cast<unsigned>(g.ladders.size()));
            out.members.push_back(std::move(g));
        }
        BigCount doubled = h.total_paths;
        doubled.shift_left(1);
        if (out.total_paths != doubled)
            throw std::runtime_error("build_mh: even step must double the path count");
    }
    if (auto err = mh_family_violation(out))
        throw std::runtime_error("build_mh: invariant violated: " + *err);
    return memo.emplace(k, std::move(out)).first->second;
}

}  // namespace

MHFamily build_mh(int k) {
    if (k < 0) throw std::invalid_argument("build_mh: need k >= 0");
    std::map<int, MHFamily> memo;
    return build_mh_cached(k, memo);
}

HFamily build_h_family(int n) {
    if (n < 1) throw std::invalid_argument("build_h_family: need n >= 1");
    std::map<int, MHFamily> memo;
    if (n % 2 == 1) return build_h_cached(n, memo);
    HFamily h = build_h_cached(n - 1, memo);
    h.n = n;
    h.extended = true;
    return h;
}

std::vector<HamPath> construct_triangle_family(int n) {
    if (n < 1) throw std::invalid_argument("construct_triangle_family: need n >= 1");
    HFamily h = build_h_family(n);
    std::vector<HamPath> out;
    for (const auto& member : h.members) {
        for (HamPath& p : z_swap(member)) {
            if (!h.extended) {
                out.push_back(std::move(p));
            } else {
                // Even ground set: append the extra vertex to the final
                // endpoint of every path. Existing union triangles persist.
                std::vector<int> order = p.order();
                order.push_back(n - 1);
                out.emplace_back(std::move(order));
            }
        }
    }
    return out;
}

}  // namespace hampath
