#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hampath/clique_search.hpp"
#include "hampath/family_builder.hpp"
#include "hampath/special_families.hpp"
#include "hampath/verifier.hpp"

namespace py = pybind11;
using namespace hampath;

namespace {

std::vector<std::vector<int>> as_orders(const std::vector<HamPath>& paths) {
    std::vector<std::vector<int>> out;
    out.reserve(paths.size());
    for (const auto& p : paths) out.push_back(p.order());
    return out;
}

std::vector<HamPath> as_paths(const std::vector<std::vector<int>>& orders) {
    std::vector<HamPath> out;
    out.reserve(orders.size());
    for (const auto& o : orders) out.emplace_back(o);
    return out;
}

py::object big_int(const BigCount& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

py::dict report_dict(const VerifyReport& r) {
    py::dict d;
    d["family_size"] = r.family_size;
    d["predicate"] = r.predicate;
    d["mode"] = r.mode;
    d["seed"] = r.seed;
    d["pairs_checked"] = r.pairs_checked;
    py::list fails;
    for (const auto& f : r.failures) {
        py::dict e;
        e["i"] = f.i;
        e["j"] = f.j;
        e["reason"] = f.reason;
        fails.append(e);
    }
    d["failures"] = fails;
    d["bipartition_injective"] = r.bipartition_injective;
    d["elapsed_seconds"] = r.elapsed_seconds;
    d["pass"] = r.pass();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact constructions, verification and clique search for families of "
              "pairwise G-different Hamiltonian paths";

    m.def("construct_triangle_family",
          [](int n) { return as_orders(construct_triangle_family(n)); }, py::arg("n"),
          "Maximum family of pairwise triangle-different Hamiltonian paths on n vertices.");

    m.def("balanced_bipartition_count", [](int n) { return big_int(balanced_bipartition_count(n)); },
          py::arg("n"));

    m.def("binomial", [](int n, int k) { return big_int(binomial(n, k)); }, py::arg("n"),
          py::arg("k"), "Exact binomial coefficient.");

    m.def("identity_check", &identity_check, py::arg("n"),
          "Exact check of sum_k C(n,k) C(k,floor(k/2)) 2^(n-k) == C(2n+1,n).");

    m.def(
        "verify_family",
        [](const std::vector<std::vector<int>>& orders, const std::string& predicate,
           std::uint64_t sample, std::uint64_t seed) {
            VerifyMode mode = sample == 0 ? VerifyMode::full() : VerifyMode::sample(sample, seed);
            return report_dict(verify_pairwise(as_paths(orders), PredicateSpec::parse(predicate), mode));
        },
        py::arg("paths"), py::arg("predicate") = "triangle", py::arg("sample") = 0,
        py::arg("seed") = 0,
        "Pairwise-union verification; sample=0 checks every pair.");

    m.def(
        "certify_tightness",
        [](const std::vector<std::vector<int>>& orders) {
            TightnessResult t = certify_tightness(as_paths(orders));
            return py::make_tuple(t.pass, t.detail);
        },
        py::arg("paths"),
        "Balanced-bipartition optimality certificate: (pass, detail).");

    m.def(
        "end_edge_injectivity",
        [](const std::vector<std::vector<int>>& orders) {
            EndEdgeResult r = end_edge_injectivity(as_paths(orders));
            return py::make_tuple(r.pass, r.detail);
        },
        py::arg("paths"));

    m.def(
        "union_contains",
        [](const std::vector<int>& a, const std::vector<int>& b, const std::string& predicate) {
            EdgeSet u = path_edges(HamPath(a)) | path_edges(HamPath(b));
            return PredicateSpec::parse(predicate).evaluate(u);
        },
        py::arg("path_a"), py::arg("path_b"), py::arg("predicate") = "triangle",
        "Does the union of the two paths contain the predicate subgraph?");

    m.def(
        "enumerate_paths",
        [](int n, bool allow_large) { return as_orders(enumerate_paths(n, allow_large)); },
        py::arg("n"), py::arg("allow_large") = false);

    m.def(
        "search_max_clique",
        [](int n, const std::string& predicate, std::uint64_t budget, bool fix_root,
           int known_upper_bound, bool allow_large) {
            CompatGraph g = build_compat(n, PredicateSpec::parse(predicate), allow_large);
            MaxCliqueOptions opt;
            opt.node_budget = budget;
            opt.fix_root = fix_root;
            opt.known_upper_bound = known_upper_bound;
            CliqueResult r = max_clique(g, opt);
            py::dict d;
            d["size"] = r.size;
            d["exact"] = r.exact;
            d["nodes"] = r.nodes;
            d["upper_bound"] = r.upper_bound;
            std::vector<std::vector<int>> witness;
            for (int idx : r.members) witness.push_back(g.paths[idx].order());
            d["witness"] = witness;
            return d;
        },
        py::arg("n"), py::arg("predicate") = "triangle", py::arg("budget") = 50'000'000ull,
        py::arg("fix_root") = false, py::arg("known_upper_bound") = 0,
        py::arg("allow_large") = false,
        "Exact max clique over the compatibility graph of all paths on n vertices.");

    m.def("hc_prime_family", [](int p) { return as_orders(hc_prime_family(p)); }, py::arg("p"),
          "C(p,2) pairwise Hamiltonian-cycle-different paths on a prime ground set.");

    m.def(
        "tree_family",
        [](int n) {
            std::vector<std::vector<std::pair<int, int>>> out;
            for (const auto& t : tree_family(n)) out.push_back(t.edges());
            return out;
        },
        py::arg("n"), "2^(n-1)-1 pairwise triangle-different trees, as edge lists.");

    m.def(
        "union_family_size",
        [](int n) {
            UnionFamilyCounts c = union_family_size(n);
            return py::make_tuple(c.triangle_containing, c.maximal_triangle_free, c.total);
        },
        py::arg("n"),
        "(triangle-containing, maximal triangle-free, total) over all labeled n-vertex graphs.");
}
