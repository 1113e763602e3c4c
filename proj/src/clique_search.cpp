#include "hampath/clique_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hampath {

BitGraph::BitGraph(int vertices) : v(vertices), words((vertices + 63) / 64) {
    rows.assign(static_cast<std::size_t>(v) * words, 0);
}

void BitGraph::add_edge(int a, int b) {
    rows[static_cast<std::size_t>(a) * words + (b >> 6)] |= std::uint64_t{1} << (b & 63);
    rows[static_cast<std::size_t>(b) * words + (a >> 6)] |= std::uint64_t{1} << (a & 63);
}

bool BitGraph::edge(int a, int b) const {
    return (rows[static_cast<std::size_t>(a) * words + (b >> 6)] >> (b & 63)) & 1;
}

std::vector<HamPath> enumerate_paths(int n, bool allow_large) {
    if (n < 2) throw std::invalid_argument("enumerate_paths: need n >= 2");
    if (n > 8 && !allow_large)
        throw std::invalid_argument("enumerate_paths: n > 8 needs the explicit override");
    if (n > 10) throw std::invalid_argument("enumerate_paths: n > 10 is out of reach");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<HamPath> out;
    do {
        if (perm.front() < perm.back()) out.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

CompatGraph build_compat(int n, const PredicateSpec& predicate, bool allow_large) {
    CompatGraph g;
    g.n = n;
    g.predicate = predicate.name();
    g.paths = enumerate_paths(n, allow_large);
    int v = static_cast<int>(g.paths.size());
    g.adj = BitGraph(v);

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(v) * n);
    for (int i = 0; i < v; ++i)
        path_edges(g.paths[i]).fill_adjacency(std::span<std::uint64_t>(rows.data() + std::size_t(i) * n, n));

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            std::uint64_t merged[kMaxVertices];
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= v) break;
                const std::uint64_t* a = rows.data() + std::size_t(i) * n;
                for (int j = i + 1; j < v; ++j) {
                    const std::uint64_t* b = rows.data() + std::size_t(j) * n;
                    for (int x = 0; x < n; ++x) merged[x] = a[x] | b[x];
                    if (predicate.evaluate(n, std::span<const std::uint64_t>(merged, n)))
                        g.adj.add_edge(i, j);
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    return g;
}

namespace {

// Fixed-width bitset helpers over the candidate sets.
struct Words {
    int count;
    std::uint64_t* data;
};

inline bool any(const std::uint64_t* a, int words) {
    for (int w = 0; w < words; ++w)
        if (a[w]) return true;
    return false;
}

inline int popcount_all(const std::uint64_t* a, int words) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(a[w]);
    return c;
}

// Greedy sequential coloring of the candidate set; emits the vertices in
// color order together with their color number (1-based). Vertices whose
// color bound cannot beat the incumbent are never emitted.
struct ColorSorter {
    int words;
    std::vector<std::uint64_t> uncolored, cls;
    std::vector<int> order_out, color_out;

    explicit ColorSorter(int words) : words(words), uncolored(words), cls(words) {}

    void run(const std::uint64_t* cand, const BitGraph& g, int min_useful) {
        order_out.clear();
        color_out.clear();
        std::copy(cand, cand + words, uncolored.data());
        int color = 0;
        while (any(uncolored.data(), words)) {
            ++color;
            std::copy(uncolored.data(), uncolored.data() + words, cls.data());
            while (true) {
                int v = -1;
                for (int w = 0; w < words; ++w)
                    if (cls[w]) {
                        v = (w << 6) + std::countr_zero(cls[w]);
                        break;
                    }
                if (v < 0) break;
                uncolored[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                const std::uint64_t* nb = g.row(v);
                for (int w = 0; w < words; ++w) cls[w] &= ~nb[w];
                cls[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                if (color >= min_useful) {
                    order_out.push_back(v);
                    color_out.push_back(color);
                }
            }
        }
    }
};

struct Searcher {
    const BitGraph& g;
    MaxCliqueOptions opt;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    bool bound_hit = false;
    int best = 0;
    std::vector<int> best_members, current;
    std::vector<ColorSorter> sorters;  // one per depth, reused

    explicit Searcher(const BitGraph& graph, const MaxCliqueOptions& options)
        : g(graph), opt(options) {}

    ColorSorter& sorter(std::size_t depth) {
        while (sorters.size() <= depth) sorters.emplace_back(g.words);
        return sorters[depth];
    }

    bool done() const { return budget_hit || bound_hit; }

    void record_if_better() {
        if (static_cast<int>(current.size()) > best) {
            best = static_cast<int>(current.size());
            best_members = current;
            if (opt.known_upper_bound > 0 && best >= opt.known_upper_bound) bound_hit = true;
        }
    }

    void expand(std::uint64_t* cand, std::size_t depth) {
        if (done()) return;
        if (++nodes > opt.node_budget) {
            budget_hit = true;
            return;
        }
        ColorSorter& cs = sorter(depth);
        int min_useful = best - static_cast<int>(current.size()) + 1;
        cs.run(cand, g, min_useful);

        // Own copies: cs is reused by sibling calls at this depth.
        std::vector<int> order = cs.order_out;
        std::vector<int> colors = cs.color_out;
        std::vector<std::uint64_t> child(g.words);

        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (done()) return;
            if (static_cast<int>(current.size()) + colors[idx] <= best) return;
            int v = order[idx];
            current.push_back(v);
            const std::uint64_t* nb = g.row(v);
            bool has_child = false;
            for (int w = 0; w < g.words; ++w) {
                child[w] = cand[w] & nb[w];
                has_child = has_child || child[w];
            }
            if (has_child) {
                expand(child.data(), depth + 1);
            } else {
                record_if_better();
            }
            current.pop_back();
            cand[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        }
    }
};

// Deterministic greedy clique used to seed the incumbent: grow from each
// vertex in degree order, always picking the candidate of largest degree.
std::vector<int> greedy_clique(const BitGraph& g) {
    std::vector<int> deg(g.v);
    for (int i = 0; i < g.v; ++i) deg[i] = popcount_all(g.row(i), g.words);
    std::vector<int> verts(g.v);
    std::iota(verts.begin(), verts.end(), 0);
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        return std::tie(deg[b], b) < std::tie(deg[a], a);
    });

    std::vector<int> best;
    std::vector<std::uint64_t> cand(g.words);
    int tries = std::min(g.v, 64);
    for (int t = 0; t < tries; ++t) {
        int seed = verts[t];
        std::vector<int> clique{seed};
        std::copy(g.row(seed), g.row(seed) + g.words, cand.data());
        while (any(cand.data(), g.words)) {
            int pick = -1, pick_deg = -1;
            for (int w = 0; w < g.words; ++w) {
                std::uint64_t bits = cand[w];
                while (bits) {
                    int v = (w << 6) + std::countr_zero(bits);
                    bits &= bits - 1;
                    int d = 0;
                    const std::uint64_t* nb = g.row(v);
                    for (int x = 0; x < g.words; ++x) d += std::popcount(nb[x] & cand[x]);
                    if (d > pick_deg) {
                        pick_deg = d;
                        pick = v;
                    }
                }
            }
            clique.push_back(pick);
            const std::uint64_t* nb = g.row(pick);
            for (int w = 0; w < g.words; ++w) cand[w] &= nb[w];
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    return best;
}

}  // namespace

CliqueResult max_clique_bits(const BitGraph& g, const MaxCliqueOptions& opt) {
    CliqueResult res;
    if (g.v == 0) {
        res.exact = true;
        return res;
    }

    Searcher s(g, opt);
    s.best_members = greedy_clique(g);
    s.best = static_cast<int>(s.best_members.size());
    if (opt.known_upper_bound > 0 && s.best >= opt.known_upper_bound) s.bound_hit = true;

    // Root coloring gives the fallback upper bound reported on timeout.
    std::vector<std::uint64_t> all(g.words, 0);
    for (int v = 0; v < g.v; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    ColorSorter root(g.words);
    root.run(all.data(), g, 1);
    int root_colors = root.color_out.empty() ? 0 : root.color_out.back();

    if (!s.bound_hit) {
        if (opt.fix_root) {
            int r = 0;
            s.current = {r};
            std::vector<std::uint64_t> cand(g.row(r), g.row(r) + g.words);
            if (any(cand.data(), g.words))
                s.expand(cand.data(), 0);
            else
                s.record_if_better();
            s.current.clear();
        } else {
            s.expand(all.data(), 0);
        }
    }

    res.size = s.best;
    res.members = s.best_members;
    std::sort(res.members.begin(), res.members.end());
    res.nodes = s.nodes;
    if (s.budget_hit) {
        res.exact = false;
        res.upper_bound = root_colors;
        if (opt.known_upper_bound > 0) res.upper_bound = std::min(res.upper_bound, opt.known_upper_bound);
        res.upper_bound = std::max(res.upper_bound, res.size);
    } else {
        // Search exhausted, or the externally proven ceiling was reached.
        res.exact = true;
        res.upper_bound = res.size;
    }
    return res;
}

CliqueResult max_clique(const CompatGraph& g, const MaxCliqueOptions& opt) {
    return max_clique_bits(g.adj, opt);
}

int zswap_optimality_oracle(const ProperLadderedGraph& g) {
    if (auto err = validate(g)) throw std::invalid_argument("zswap_optimality_oracle: " + *err);
    if (g.n > 9) throw std::invalid_argument("zswap_optimality_oracle: n > 9 is out of desk scale");
    if (g.n < 2) return 1;

    WeightedGraph weights = derived_weights(g);
    std::vector<HamPath> typed;
    for (HamPath& p : enumerate_paths(g.n, true))
        if (is_g_type(p, weights)) typed.push_back(std::move(p));
    if (typed.empty()) return 0;

    BitGraph adj(static_cast<int>(typed.size()));
    for (std::size_t i = 0; i < typed.size(); ++i) {
        EdgeSet ei = path_edges(typed[i]);
        for (std::size_t j = i + 1; j < typed.size(); ++j)
            if (contains_triangle(ei | path_edges(typed[j])))
                adj.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    CliqueResult res = max_clique_bits(adj, {});
    return res.size;
}

std::string render_table(const std::vector<TableCell>& cells) {
    int max_n = 0;
    for (const auto& c : cells) max_n = std::max(max_n, c.n);
    std::ostringstream out;
    out << "n        ";
    for (int n = 3; n <= max_n; ++n) out << "|" << n << "\t";
    out << "\n";
    for (int cycle = 3; cycle <= max_n; ++cycle) {
        bool row_used = false;
        for (const auto& c : cells) row_used = row_used || c.cycle == cycle;
        if (!row_used) continue;
        out << cycle << "-cycle  ";
        for (int n = 3; n <= max_n; ++n) {
            out << "|";
            for (const auto& c : cells)
                if (c.n == n && c.cycle == cycle)
                    out << c.result.size << (c.result.exact ? "" : "*");
            out << "\t";
        }
        out << "\n";
    }
    out << "(* = budget-limited lower bound)\n";
    return out.str();
}

}  // namespace hampath
