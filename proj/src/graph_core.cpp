#include "hampath/graph_core.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hampath {

EdgeSet::EdgeSet(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("EdgeSet: bad vertex count");
    bits_.assign((pair_count(n) + 63) / 64, 0);
}

void EdgeSet::check_pair(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("EdgeSet: bad vertex pair");
}

bool EdgeSet::has(int u, int v) const {
    check_pair(u, v);
    int idx = pair_index(u, v);
    return (bits_[idx >> 6] >> (idx & 63)) & 1;
}

bool EdgeSet::add(int u, int v) {
    check_pair(u, v);
    int idx = pair_index(u, v);
    std::uint64_t bit = std::uint64_t{1} << (idx & 63);
    if (bits_[idx >> 6] & bit) return false;
    bits_[idx >> 6] |= bit;
    ++count_;
    return true;
}

EdgeSet EdgeSet::operator|(const EdgeSet& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("EdgeSet union: size mismatch");
    EdgeSet out(n_);
    int count = 0;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        out.bits_[w] = bits_[w] | rhs.bits_[w];
        count += std::popcount(out.bits_[w]);
    }
    out.count_ = count;
    return out;
}

std::vector<std::pair<int, int>> EdgeSet::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(count_);
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            if (has(u, v)) out.emplace_back(u, v);
    return out;
}

int EdgeSet::degree(int u) const {
    int d = 0;
    for (int v = 0; v < n_; ++v)
        if (v != u && has(u, v)) ++d;
    return d;
}

void EdgeSet::fill_adjacency(std::span<std::uint64_t> rows) const {
    for (int u = 0; u < n_; ++u) rows[u] = 0;
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            if (has(u, v)) {
                rows[u] |= std::uint64_t{1} << v;
                rows[v] |= std::uint64_t{1} << u;
            }
}

Bipartition::Bipartition(int n, std::uint64_t side_mask) : n_(n) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("Bipartition: bad vertex count");
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    side_ = side_mask & all;
    if (side_ & 1) side_ ^= all;  // canonical: vertex 0 on side A
}

bool Bipartition::balanced() const {
    int on = std::popcount(side_);
    return on == n_ / 2 || on == (n_ + 1) / 2;
}

HamPath::HamPath(std::vector<int> order) : order_(std::move(order)) {
    int n = static_cast<int>(order_.size());
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("HamPath: bad vertex count");
    std::uint64_t seen = 0;
    for (int v : order_) {
        if (v < 0 || v >= n) throw std::invalid_argument("HamPath: vertex out of range");
        std::uint64_t bit = std::uint64_t{1} << v;
        if (seen & bit) throw std::invalid_argument("HamPath: repeated vertex");
        seen |= bit;
    }
    if (n >= 2 && order_.front() > order_.back())
        std::reverse(order_.begin(), order_.end());
}

EdgeSet path_edges(const HamPath& p) {
    EdgeSet out(p.n());
    const auto& ord = p.order();
    for (std::size_t i = 1; i < ord.size(); ++i) out.add(ord[i - 1], ord[i]);
    return out;
}

Bipartition path_bipartition(const HamPath& p) {
    std::uint64_t side = 0;
    const auto& ord = p.order();
    for (std::size_t i = 0; i < ord.size(); ++i)
        if (i & 1) side |= std::uint64_t{1} << ord[i];
    return Bipartition(p.n(), side);
}

namespace {

std::vector<std::uint64_t> adjacency_of(const EdgeSet& g) {
    std::vector<std::uint64_t> rows(g.n());
    g.fill_adjacency(rows);
    return rows;
}

// Depth-first search for a k-cycle whose minimum vertex is `start`;
// only vertices above `start` may appear in the interior.
bool cycle_dfs(int start, int last, int depth, int k, std::uint64_t used, std::span<const std::uint64_t> rows) {
    if (depth == k) return (rows[last] >> start) & 1;
    std::uint64_t cand = rows[last] & ~used;
    cand &= ~((std::uint64_t{1} << (start + 1)) - 1);  // interior vertices > start
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        if (cycle_dfs(start, v, depth + 1, k, used | (std::uint64_t{1} << v), rows))
            return true;
    }
    return false;
}

}  // namespace

bool triangle_in_rows(int n, std::span<const std::uint64_t> rows) {
    for (int u = 0; u + 1 < n; ++u) {
        std::uint64_t higher = rows[u] >> (u + 1) << (u + 1);
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            if (rows[u] & rows[v]) return true;
        }
    }
    return false;
}

bool cycle_of_length_in_rows(int n, std::span<const std::uint64_t> rows, int k) {
    if (k < 3 || k > n) throw std::invalid_argument("cycle length out of range");
    for (int s = 0; s + k <= n; ++s) {
        if (cycle_dfs(s, s, 1, k, std::uint64_t{1} << s, rows)) return true;
    }
    return false;
}

bool odd_cycle_in_rows(int n, std::span<const std::uint64_t> rows) {
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            std::uint64_t nb = rows[u];
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return true;
                }
            }
        }
    }
    return false;
}

bool hamiltonian_cycle_in_rows(int n, std::span<const std::uint64_t> rows) {
    if (n < 3) return false;
    for (int u = 0; u < n; ++u)
        if (std::popcount(rows[u]) < 2) return false;
    return cycle_of_length_in_rows(n, rows, n);
}

bool contains_triangle(const EdgeSet& g) {
    return triangle_in_rows(g.n(), adjacency_of(g));
}

bool contains_cycle_of_length(const EdgeSet& g, int k) {
    return cycle_of_length_in_rows(g.n(), adjacency_of(g), k);
}

bool contains_odd_cycle(const EdgeSet& g) {
    return odd_cycle_in_rows(g.n(), adjacency_of(g));
}

bool contains_hamiltonian_cycle(const EdgeSet& g) {
    return hamiltonian_cycle_in_rows(g.n(), adjacency_of(g));
}

}  // namespace hampath
