#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "hampath/clique_search.hpp"
#include "hampath/family_builder.hpp"
#include "hampath/family_file.hpp"
#include "hampath/special_families.hpp"
#include "hampath/verifier.hpp"

namespace {

constexpr const char* kVersion = "hampath 0.1.0";

// Exit contract: 0 success / verified, 1 verification or assertion
// failure, 2 usage or format error.
enum ExitCode { kOk = 0, kFail = 1, kUsage = 2 };

void write_family(const hampath::FamilyFile& f, const std::string& out_path, const std::string& format) {
    if (out_path == "-") {
        if (format == "doc")
            f.write_doc(std::cout);
        else
            f.write_lines(std::cout);
    } else {
        f.write_file(out_path, format);
    }
}

int cmd_construct(int n, const std::string& out_path, const std::string& format) {
    auto family = hampath::construct_triangle_family(n);
    hampath::BigCount target = hampath::balanced_bipartition_count(n);
    std::cerr << "constructed " << family.size() << " triangle-different paths on " << n
              << " vertices (balanced-bipartition target " << target.str() << ")\n";
    if (hampath::BigCount(family.size()) != target) {
        std::cerr << "error: count does not meet the balanced-bipartition target\n";
        return kFail;
    }
    hampath::FamilyFile f;
    f.n = n;
    f.paths = std::move(family);
    f.predicate = "triangle";
    f.generator_version = kVersion;
    f.construction = "z-swap over the recursive ladder families, n=" + std::to_string(n);
    write_family(f, out_path, format);
    return kOk;
}

int cmd_verify(const std::string& family_path, const std::string& predicate_text,
               const std::string& mode_text, std::uint64_t seed, bool as_json) {
    hampath::FamilyFile f = hampath::FamilyFile::read_file(family_path);
    if (f.paths.empty()) {
        std::cerr << "error: family file has no paths\n";
        return kUsage;
    }
    hampath::PredicateSpec pred = hampath::PredicateSpec::parse(predicate_text);
    hampath::VerifyMode mode;
    if (mode_text == "full") {
        mode = hampath::VerifyMode::full();
    } else if (mode_text.rfind("sample:", 0) == 0) {
        std::uint64_t pairs = std::stoull(mode_text.substr(7));
        if (pairs == 0) throw CLI::ValidationError("--mode", "sample size must be positive");
        mode = hampath::VerifyMode::sample(pairs, seed);
    } else {
        throw CLI::ValidationError("--mode", "expected full or sample:N");
    }
    hampath::VerifyReport report = hampath::verify_pairwise(f.paths, pred, mode);
    if (as_json)
        std::cout << report.json().dump(2) << "\n";
    else
        std::cout << report.text();
    return report.pass() ? kOk : kFail;
}

int cmd_search(int n, const std::string& predicate_text, std::uint64_t budget, bool fix_root,
               bool table, bool allow_large, const std::string& witness_path) {
    using namespace hampath;
    if (table) {
        std::vector<TableCell> cells;
        for (int nn = 3; nn <= n; ++nn) {
            for (int cycle = 3; cycle <= nn; ++cycle) {
                PredicateSpec pred{PredicateSpec::Kind::CycleK, cycle};
                CompatGraph g = build_compat(nn, pred, allow_large);
                MaxCliqueOptions opt;
                opt.node_budget = budget;
                opt.fix_root = fix_root;
                if (cycle % 2 == 1)
                    opt.known_upper_bound = static_cast<int>(balanced_bipartition_count(nn).to_u64());
                if (cycle == nn)
                    opt.known_upper_bound = static_cast<int>(binomial(nn, 2).to_u64());
                cells.push_back({nn, cycle, max_clique(g, opt)});
                std::cerr << "cell n=" << nn << " cycle=" << cycle << ": " << cells.back().result.size
                          << (cells.back().result.exact ? " exact" : " incomplete") << "\n";
            }
        }
        std::cout << render_table(cells);
        return kOk;
    }

    PredicateSpec pred = PredicateSpec::parse(predicate_text);
    CompatGraph g = build_compat(n, pred, allow_large);
    MaxCliqueOptions opt;
    opt.node_budget = budget;
    opt.fix_root = fix_root;
    if (pred.kind == PredicateSpec::Kind::Triangle || pred.kind == PredicateSpec::Kind::OddCycle ||
        (pred.kind == PredicateSpec::Kind::CycleK && pred.k % 2 == 1 && pred.k <= n))
        opt.known_upper_bound = static_cast<int>(balanced_bipartition_count(n).to_u64());
    if (pred.kind == PredicateSpec::Kind::HamCycle ||
        (pred.kind == PredicateSpec::Kind::CycleK && pred.k == n))
        opt.known_upper_bound = static_cast<int>(binomial(n, 2).to_u64());
    CliqueResult res = max_clique(g, opt);

    std::cout << (res.exact ? "exact " : "incomplete ") << res.size;
    if (!res.exact) std::cout << " (proven upper bound " << res.upper_bound << ")";
    std::cout << "  [n=" << n << " predicate=" << pred.name() << " vertices=" << g.paths.size()
              << " nodes=" << res.nodes << "]\n";

    if (!witness_path.empty()) {
        FamilyFile f;
        f.n = n;
        for (int idx : res.members) f.paths.push_back(g.paths[idx]);
        f.predicate = pred.name();
        f.generator_version = kVersion;
        f.construction = "max-clique witness, n=" + std::to_string(n);
        write_family(f, witness_path, "lines");
    }
    return kOk;
}

int cmd_identity(int max_n) {
    bool all_ok = true;
    for (int n = 0; n <= max_n; ++n) {
        hampath::BigCount lhs(0);
        for (int k = 0; k <= n; ++k) {
            hampath::BigCount term = hampath::binomial(n, k) * hampath::binomial(k, k / 2);
            term.shift_left(static_cast<unsigned>(n - k));
            lhs += term;
        }
        hampath::BigCount rhs = hampath::binomial(2 * n + 1, n);
        bool ok = lhs == rhs;
        all_ok = all_ok && ok;
        std::cout << "n=" << n << ": " << lhs.str() << (ok ? " = " : " != ") << rhs.str() << "\n";
    }
    return all_ok ? kOk : kFail;
}

int cmd_special_hc_prime(int p, const std::string& out_path) {
    auto family = hampath::hc_prime_family(p);
    std::cout << "hc-prime p=" << p << ": " << family.size() << " paths\n";
    auto report = hampath::verify_pairwise(family, {hampath::PredicateSpec::Kind::HamCycle, 0});
    auto ends = hampath::end_edge_injectivity(family);
    std::cout << "ham-cycle verification: " << (report.pass() ? "pass" : "fail") << " ("
              << report.pairs_checked << " pairs)\n";
    std::cout << "end-edge injectivity: " << (ends.pass ? "pass" : "fail") << " (" << ends.detail
              << ")\n";
    if (!out_path.empty()) {
        hampath::FamilyFile f;
        f.n = p;
        f.paths = family;
        f.predicate = "ham-cycle";
        f.generator_version = kVersion;
        f.construction = "prime circulant length classes, p=" + std::to_string(p);
        write_family(f, out_path, "lines");
    }
    return report.pass() && ends.pass ? kOk : kFail;
}

int cmd_special_trees(int n, const std::string& out_path) {
    auto trees = hampath::tree_family(n);
    std::cout << "trees n=" << n << ": " << trees.size() << " trees\n";

    bool ok = true;
    for (std::size_t i = 0; i < trees.size() && ok; ++i)
        for (std::size_t j = i + 1; j < trees.size() && ok; ++j)
            ok = hampath::contains_triangle(trees[i] | trees[j]);
    std::cout << "pairwise triangle verification: " << (ok ? "pass" : "fail") << "\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << n << ' ' << trees.size() << '\n';
        for (const auto& t : trees) {
            bool first = true;
            for (auto [u, v] : t.edges()) {
                if (!first) out << ' ';
                out << u << '-' << v;
                first = false;
            }
            out << '\n';
        }
    }
    return ok ? kOk : kFail;
}

int cmd_special_mtf(int n) {
    auto counts = hampath::union_family_size(n);
    std::cout << "n=" << n << ": " << counts.triangle_containing << " triangle-containing, "
              << counts.maximal_triangle_free << " maximal triangle-free, family size "
              << counts.total << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact constructions, verification and clique search for families of "
                 "pairwise G-different Hamiltonian paths"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "Build the maximum triangle-different family");
    int construct_n = 0;
    std::string construct_out = "-", construct_format = "lines";
    construct->add_option("--n", construct_n, "ground-set size")->required()->check(CLI::PositiveNumber);
    construct->add_option("--out", construct_out, "output path, - for stdout");
    construct->add_option("--format", construct_format, "lines|doc")
        ->check(CLI::IsMember({"lines", "doc"}));

    auto* verify = app.add_subcommand("verify", "Check a family file against a union predicate");
    std::string verify_family, verify_pred = "triangle", verify_mode = "full";
    std::uint64_t verify_seed = 0;
    bool verify_json = false;
    verify->add_option("--family", verify_family, "family file")->required();
    verify->add_option("--predicate", verify_pred, "triangle|odd-cycle|cycle:K|ham-cycle");
    verify->add_option("--mode", verify_mode, "full|sample:N");
    verify->add_option("--seed", verify_seed, "sampling seed");
    verify->add_flag("--json", verify_json, "emit the structured report");

    auto* search = app.add_subcommand("search", "Exact max clique over the path compatibility graph");
    int search_n = 0;
    std::string search_pred = "triangle", search_witness;
    std::uint64_t search_budget = 50'000'000ull;
    std::string search_fix_root = "off";
    bool search_table = false, search_allow_large = false;
    search->add_option("--n", search_n, "ground-set size")->required()->check(CLI::Range(2, 10));
    search->add_option("--predicate", search_pred, "triangle|odd-cycle|cycle:K|ham-cycle");
    search->add_option("--budget", search_budget, "node-expansion budget");
    search->add_option("--fix-root", search_fix_root, "on|off: symmetry-reduced search")
        ->check(CLI::IsMember({"on", "off"}));
    search->add_flag("--table", search_table, "sweep all reference-table cells with n <= N");
    search->add_flag("--allow-large", search_allow_large, "lift the n <= 8 enumeration guard");
    search->add_option("--witness", search_witness, "write the witness family to this path");

    auto* identity = app.add_subcommand("identity", "Check the ladder-count identity");
    int identity_max = 0;
    identity->add_option("--max-n", identity_max, "check all 0..N")->required()
        ->check(CLI::NonNegativeNumber);

    auto* special = app.add_subcommand("special", "Side constructions");
    special->require_subcommand(1);
    auto* hc = special->add_subcommand("hc-prime", "Hamiltonian-cycle-different family on a prime");
    int hc_p = 0;
    std::string hc_out;
    hc->add_option("--p", hc_p, "prime ground-set size")->required();
    hc->add_option("--out", hc_out, "write the family to this path");
    auto* trees = special->add_subcommand("trees", "Triangle-different spanning trees");
    int trees_n = 0;
    std::string trees_out;
    trees->add_option("--n", trees_n, "ground-set size")->required()->check(CLI::Range(2, 16));
    trees->add_option("--out", trees_out, "write the trees as edge lists");
    auto* mtf = special->add_subcommand("mtf", "Classify maximal triangle-free graphs");
    int mtf_n = 0;
    mtf->add_option("--n", mtf_n, "ground-set size")->required()->check(CLI::Range(3, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*construct) return cmd_construct(construct_n, construct_out, construct_format);
        if (*verify) return cmd_verify(verify_family, verify_pred, verify_mode, verify_seed, verify_json);
        if (*search)
            return cmd_search(search_n, search_pred, search_budget, search_fix_root == "on",
                              search_table, search_allow_large, search_witness);
        if (*identity) return cmd_identity(identity_max);
        if (*special) {
            if (*hc) return cmd_special_hc_prime(hc_p, hc_out);
            if (*trees) return cmd_special_trees(trees_n, trees_out);
            if (*mtf) return cmd_special_mtf(mtf_n);
        }
    } catch (const hampath::FamilyFormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
