#include "hampath/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hampath {

PredicateSpec PredicateSpec::parse(const std::string& text) {
    if (text == "triangle") return {Kind::Triangle, 0};
    if (text == "odd-cycle") return {Kind::OddCycle, 0};
    if (text == "ham-cycle") return {Kind::HamCycle, 0};
    if (text.rfind("cycle:", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(text.substr(6));
        } catch (...) {
            throw std::invalid_argument("bad predicate: " + text);
        }
        if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
        return {Kind::CycleK, k};
    }
    throw std::invalid_argument("bad predicate: " + text);
}

std::string PredicateSpec::name() const {
    switch (kind) {
        case Kind::Triangle: return "triangle";
        case Kind::OddCycle: return "odd-cycle";
        case Kind::CycleK: return "cycle:" + std::to_string(k);
        case Kind::HamCycle: return "ham-cycle";
    }
    return "?";
}

bool PredicateSpec::evaluate(int n, std::span<const std::uint64_t> rows) const {
    switch (kind) {
        case Kind::Triangle: return triangle_in_rows(n, rows);
        case Kind::OddCycle: return odd_cycle_in_rows(n, rows);
        case Kind::CycleK:
            if (k > n) return false;
            return cycle_of_length_in_rows(n, rows, k);
        case Kind::HamCycle: return hamiltonian_cycle_in_rows(n, rows);
    }
    return false;
}

bool PredicateSpec::evaluate(const EdgeSet& g) const {
    std::vector<std::uint64_t> rows(g.n());
    g.fill_adjacency(rows);
    return evaluate(g.n(), rows);
}

namespace {

std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4b9b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct PairChecker {
    int n;
    const std::vector<std::uint64_t>& rows;  // family_size * n adjacency rows
    const PredicateSpec& pred;

    bool ok(std::size_t i, std::size_t j) const {
        std::uint64_t merged[kMaxVertices];
        const std::uint64_t* a = rows.data() + i * n;
        const std::uint64_t* b = rows.data() + j * n;
        for (int v = 0; v < n; ++v) merged[v] = a[v] | b[v];
        return pred.evaluate(n, std::span<const std::uint64_t>(merged, n));
    }
};

}  // namespace

VerifyReport verify_pairwise(const std::vector<HamPath>& family, const PredicateSpec& predicate,
                             const VerifyMode& mode) {
    auto started = std::chrono::steady_clock::now();
    if (family.empty()) throw std::invalid_argument("verify_pairwise: empty family");
    int n = family[0].n();
    for (const auto& p : family)
        if (p.n() != n) throw std::invalid_argument("verify_pairwise: mixed vertex counts");

    VerifyReport report;
    report.family_size = family.size();
    report.predicate = predicate.name();

    // Duplicates first; duplicate pairs are excluded from the pair scan.
    std::set<std::pair<std::size_t, std::size_t>> duplicate_pairs;
    {
        std::map<HamPath, std::size_t> first_seen;
        for (std::size_t i = 0; i < family.size(); ++i) {
            auto [it, fresh] = first_seen.try_emplace(family[i], i);
            if (!fresh) {
                report.failures.push_back({it->second, i, "duplicate path"});
                duplicate_pairs.emplace(it->second, i);
            }
        }
    }

    std::vector<std::uint64_t> rows(family.size() * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < family.size(); ++i) {
        EdgeSet es = path_edges(family[i]);
        es.fill_adjacency(std::span<std::uint64_t>(rows.data() + i * n, n));
    }
    PairChecker checker{n, rows, predicate};

    std::size_t m = family.size();
    std::uint64_t total_pairs = static_cast<std::uint64_t>(m) * (m - 1) / 2;

    if (!mode.sampled || mode.sample_pairs >= total_pairs) {
        // Full scan, parallel over the first index.
        report.mode = mode.sampled ? "sample:" + std::to_string(mode.sample_pairs) : "full";
        report.seed = mode.sampled ? mode.seed : 0;
        report.pairs_checked = total_pairs;

        unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        workers = static_cast<unsigned>(std::min<std::size_t>(workers, m));
        std::vector<std::vector<PairFailure>> found(workers);
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= m) break;
                    for (std::size_t j = i + 1; j < m; ++j) {
                        if (duplicate_pairs.contains({i, j})) continue;
                        if (!checker.ok(i, j))
                            found[w].push_back({i, j, "union lacks " + report.predicate});
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& part : found)
            report.failures.insert(report.failures.end(), part.begin(), part.end());
    } else {
        report.mode = "sample:" + std::to_string(mode.sample_pairs);
        report.seed = mode.seed;
        report.pairs_checked = mode.sample_pairs;

        std::uint64_t state = mode.seed;
        std::set<std::uint64_t> seen;
        while (seen.size() < mode.sample_pairs) {
            std::uint64_t r = splitmix64_next(state) % total_pairs;
            if (!seen.insert(r).second) continue;
            // Invert pair_index: largest j with j(j-1)/2 <= r, then i.
            auto j = static_cast<std::uint64_t>((1.0 + std::sqrt(8.0 * static_cast<double>(r) + 1.0)) / 2.0);
            while (j * (j - 1) / 2 > r) --j;
            while ((j + 1) * j / 2 <= r) ++j;
            std::size_t i = static_cast<std::size_t>(r - j * (j - 1) / 2);
            if (duplicate_pairs.contains({i, j})) continue;
            if (!checker.ok(i, static_cast<std::size_t>(j)))
                report.failures.push_back({i, static_cast<std::size_t>(j), "union lacks " + report.predicate});
        }
    }

    std::sort(report.failures.begin(), report.failures.end(),
              [](const PairFailure& a, const PairFailure& b) {
                  return std::tie(a.i, a.j) < std::tie(b.i, b.j);
              });

    {
        std::vector<std::uint64_t> masks;
        masks.reserve(m);
        for (const auto& p : family) masks.push_back(path_bipartition(p).mask());
        std::sort(masks.begin(), masks.end());
        report.bipartition_injective =
            std::adjacent_find(masks.begin(), masks.end()) == masks.end();
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

std::string VerifyReport::text() const {
    std::ostringstream out;
    out << "family size: " << family_size << "\n";
    out << "predicate: " << predicate << "\n";
    out << "mode: " << mode;
    if (mode.rfind("sample:", 0) == 0) out << " seed=" << seed;
    out << "\n";
    out << "pairs checked: " << pairs_checked << "\n";
    out << "failures: " << failures.size() << "\n";
    for (const auto& f : failures)
        out << "  pair (" << f.i << "," << f.j << "): " << f.reason << "\n";
    out << "bipartition-injective: " << (bipartition_injective ? "yes" : "no") << "\n";
    out << "elapsed: " << elapsed_seconds << "s\n";
    out << "verdict: " << (pass() ? "pass" : "fail") << "\n";
    return out.str();
}

nlohmann::json VerifyReport::json() const {
    nlohmann::json j;
    j["family_size"] = family_size;
    j["predicate"] = predicate;
    j["mode"] = mode;
    if (mode.rfind("sample:", 0) == 0) j["seed"] = seed;
    j["pairs_checked"] = pairs_checked;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : failures)
        j["failures"].push_back({{"i", f.i}, {"j", f.j}, {"reason", f.reason}});
    j["bipartition_injective"] = bipartition_injective;
    j["elapsed_seconds"] = elapsed_seconds;
    j["verdict"] = pass() ? "pass" : "fail";
    return j;
}

TightnessResult certify_tightness(const std::vector<HamPath>& family) {
    if (family.empty()) return {false, "empty family"};
    int n = family[0].n();
    std::vector<std::uint64_t> masks;
    masks.reserve(family.size());
    for (const auto& p : family) {
        if (p.n() != n) return {false, "mixed vertex counts"};
        Bipartition b = path_bipartition(p);
        if (!b.balanced()) return {false, "unbalanced bipartition found"};
        masks.push_back(b.mask());
    }
    std::sort(masks.begin(), masks.end());
    if (std::adjacent_find(masks.begin(), masks.end()) != masks.end())
        return {false, "two paths share a bipartition"};
    BigCount target = balanced_bipartition_count(n);
    if (BigCount(family.size()) != target)
        return {false, "size " + std::to_string(family.size()) + " != balanced bipartition number " +
                           target.str()};
    return {true, "size " + target.str() + " meets the balanced-bipartition bound with equality"};
}

EndEdgeResult end_edge_injectivity(const std::vector<HamPath>& family) {
    if (family.empty()) return {false, "empty family"};
    std::set<std::pair<int, int>> seen;
    for (const auto& p : family) {
        if (p.n() < 2) return {false, "paths need at least one edge"};
        const auto& ord = p.order();
        std::pair<int, int> head{ord.front(), ord[1]};
        std::pair<int, int> tail{ord.back(), ord[ord.size() - 2]};
        if (!seen.insert(head).second)
            return {false, "directed end-edge (" + std::to_string(head.first) + "->" +
                               std::to_string(head.second) + ") repeats"};
        if (!seen.insert(tail).second)
            return {false, "directed end-edge (" + std::to_string(tail.first) + "->" +
                               std::to_string(tail.second) + ") repeats"};
    }
    return {true, std::to_string(2 * family.size()) + " directed end-edges, all distinct"};
}

}  // namespace hampath
