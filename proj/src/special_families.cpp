#include "hampath/special_families.hpp"

#include <algorithm>
#include <stdexcept>

namespace hampath {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<HamPath> hc_prime_family(int p) {
    if (p <= 2 || !is_prime(p)) throw std::invalid_argument("hc_prime_family: p must be a prime > 2");
    std::vector<HamPath> out;
    out.reserve(static_cast<std::size_t>(p) * (p - 1) / 2);
    for (int len = 1; len <= (p - 1) / 2; ++len) {
        // The length class {(i, i+len)} is one circulant p-cycle; dropping
        // any single edge leaves a Hamiltonian path.
        for (int omit = 0; omit < p; ++omit) {
            std::vector<int> order;
            order.reserve(p);
            int v = (omit + len) % p;
            for (int step = 0; step < p; ++step) {
                order.push_back(v);
                v = (v + len) % p;
            }
            out.emplace_back(std::move(order));
        }
    }
    return out;
}

std::vector<EdgeSet> tree_family(int n) {
    if (n < 2) throw std::invalid_argument("tree_family: need n >= 2");
    std::vector<EdgeSet> trees;
    {
        EdgeSet base(2);
        base.add(0, 1);
        trees.push_back(std::move(base));
    }
    for (int m = 3; m <= n; ++m) {
        std::vector<EdgeSet> next;
        next.reserve(2 * trees.size() + 1);
        int leaf = m - 1;
        for (const EdgeSet& t : trees) {
            auto grown = [&](int attach) {
                EdgeSet g(m);
                for (auto [u, v] : t.edges()) g.add(u, v);
                g.add(attach, leaf);
                return g;
            };
            // The fixed adjacent pair is the lexicographically least edge.
            auto all = t.edges();
            auto [x, y] = *std::min_element(all.begin(), all.end());
            next.push_back(grown(x));
            next.push_back(grown(y));
        }
        EdgeSet star(m);
        for (int u = 0; u < leaf; ++u) star.add(u, leaf);
        next.push_back(std::move(star));
        trees = std::move(next);
    }
    return trees;
}

namespace {

bool code_has_triangle(int n, std::uint64_t code) {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!((code >> pair_index(a, b)) & 1)) continue;
            for (int c = b + 1; c < n; ++c)
                if (((code >> pair_index(a, c)) & 1) && ((code >> pair_index(b, c)) & 1)) return true;
        }
    return false;
}

}  // namespace

UnionFamilyCounts union_family_size(int n) {
    if (n < 3 || n > 6) throw std::invalid_argument("union_family_size: need 3 <= n <= 6");
    int pairs = pair_count(n);
    UnionFamilyCounts counts;
    std::vector<std::uint64_t> mtf;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        if (code_has_triangle(n, code)) {
            ++counts.triangle_containing;
            continue;
        }
        bool maximal = true;
        for (int bit = 0; bit < pairs && maximal; ++bit) {
            if ((code >> bit) & 1) continue;
            if (!code_has_triangle(n, code | (std::uint64_t{1} << bit))) maximal = false;
        }
        if (maximal) {
            ++counts.maximal_triangle_free;
            mtf.push_back(code);
        }
    }
    counts.total = counts.triangle_containing + counts.maximal_triangle_free;

    // Sanity pass over the assembled family. Unions touching a
    // triangle-containing member are trivially fine, so only the maximal
    // triangle-free members need the pairwise check.
    for (std::size_t i = 0; i < mtf.size(); ++i)
        for (std::size_t j = i + 1; j < mtf.size(); ++j)
            if (!code_has_triangle(n, mtf[i] | mtf[j]))
                throw std::runtime_error("union_family_size: pairwise union property failed");
    return counts;
}

}  // namespace hampath
