// Command-line surface: expand / schubert / words / atoms / tree / vexillary /
// verify / census over fixed-point-free involutions.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fpf/fpf.hpp"

namespace {

using namespace fpf;

struct Options {
    std::string format;  // "", "json", "text"
    int max = 8;
    int trunc = 0;
    int threads = 1;
    int depth_limit = 256;
};

int g_failures = 0;
bool g_json_report = false;
Json g_report = Json::array();

void report(const std::string& name, bool ok, const std::string& detail = "") {
    if (g_json_report) {
        Json entry;
        entry["check"] = name;
        entry["ok"] = ok;
        if (!detail.empty()) entry["detail"] = detail;
        g_report.push_back(entry);
    } else {
        std::cout << (ok ? "ok   " : "FAIL ") << name;
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
    }
    if (!ok) ++g_failures;
}

// ------------------------------------------------------------------ verbs --

int cmd_expand(const std::string& target, const Options& opt) {
    FpfInvolution z = parse_involution(target);
    SymExpansion e = expand_fpf_stanley(z, opt.depth_limit);
    if (opt.format == "text") {
        bool first = true;
        for (auto& [lam, c] : e.coeffs) {
            if (!first) std::cout << " + ";
            first = false;
            if (c != 1) std::cout << c.str() << "*";
            std::cout << "P(" << lam.to_string() << ")";
        }
        if (first) std::cout << "0";
        std::cout << "\n";
    } else {
        std::cout << expansion_to_json(e).dump() << "\n";
    }
    return 0;
}

int cmd_schubert(const std::string& target, const Options& opt) {
    FpfInvolution z = parse_involution(target);
    Poly f = fpf_schubert(z);
    if (opt.format == "json") std::cout << poly_to_json(f).dump() << "\n";
    else std::cout << f.to_string() << "\n";
    return 0;
}

int cmd_words(const std::string& target, bool count_only) {
    FpfInvolution z = parse_involution(target);
    if (count_only) {
        ReducedWordCounter counter;
        std::cout << fpf_reduced_word_count(z, counter).str() << "\n";
        return 0;
    }
    for_each_fpf_reduced_word(z, [](const std::vector<int>& w) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) std::cout << ',';
            std::cout << w[i];
        }
        std::cout << "\n";
    });
    return 0;
}

int cmd_atoms(const std::string& target, const std::string& mode, const Options& opt) {
    FpfInvolution z = parse_involution(target);
    AtomSet a = atoms(z, mode == "bruteforce" ? AtomMode::bruteforce : AtomMode::closure);
    if (opt.format == "json") {
        Json j;
        j["beta_min"] = one_line_string(a.beta_min);
        Json arr = Json::array();
        for (auto& w : a.atoms) arr.push_back(one_line_string(w));
        j["atoms"] = arr;
        std::cout << j.dump() << "\n";
    } else {
        for (auto& w : a.atoms) std::cout << one_line_string(w) << "\n";
    }
    return 0;
}

int cmd_tree(const std::string& target, const Options& opt) {
    FpfInvolution z = parse_involution(target);
    LSTree t = build_ls_tree(z, opt.depth_limit);
    if (t.depth_limit_hit) {
        std::cerr << "error: depth limit " << opt.depth_limit << " hit\n";
        return 1;
    }
    std::cout << tree_to_dot(t);
    return 0;
}

int cmd_vexillary(const std::string& target, const std::string& mode, const Options& opt) {
    FpfInvolution z = parse_involution(target);
    VexResult r = is_fpf_vexillary(z, mode == "oracle" ? VexMode::oracle : VexMode::pattern);
    Json j;
    j["vexillary"] = r.vexillary;
    if (r.witness) j["witness"] = *r.witness;
    else j["witness"] = nullptr;
    if (r.vexillary) {
        j["shape"] = r.shape ? r.shape->to_string() : nu_shape(z.to_positive()).to_string();
    } else {
        j["expansion"] = expansion_to_json(expand_fpf_stanley(z.to_positive()));
    }
    if (opt.format == "text") {
        std::cout << (r.vexillary ? "vexillary" : "not vexillary") << "\n";
        if (r.vexillary) std::cout << "shape: " << j["shape"].get<std::string>() << "\n";
    } else {
        std::cout << j.dump() << "\n";
    }
    return 0;
}

int cmd_census(const std::string& stat, const Options& opt) {
    std::vector<std::pair<int, BigInt>> rows;
    ReducedWordCounter counter;
    for (int n = 2; n <= opt.max; n += 2) {
        BigInt c;
        if (stat == "rhat") c = rhat_count(n, counter);
        else if (stat == "grassmannian") c = count_grassmannian(n, opt.threads);
        else if (stat == "visible-descents") c = count_visible_descents_le1(n, opt.threads);
        else if (stat == "vexillary") c = count_vexillary(n, VexMode::oracle, opt.threads);
        else throw CLI::ValidationError("unknown stat " + stat);
        rows.push_back({n, c});
    }
    if (opt.format == "json") {
        Json j;
        j["stat"] = stat;
        Json values = Json::object();
        for (auto& [n, c] : rows) {
            if (c <= std::numeric_limits<std::int64_t>::max())
                values[std::to_string(n)] = static_cast<std::int64_t>(c);
            else
                values[std::to_string(n)] = c.str();
        }
        j["values"] = values;
        std::cout << j.dump() << "\n";
    } else {
        for (auto& [n, c] : rows) std::cout << n << " " << c << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- verify --

void verify_recurrence(const Options& opt) {
    // Eq (2.1) on S_5
    {
        bool ok = true;
        std::vector<int> line{1, 2, 3, 4, 5};
        do {
            Permutation w = Permutation::from_one_line(line, 1);
            Poly f = schubert(w);
            for (int i = 1; i <= 5; ++i) {
                Poly d = divided_difference(f, i);
                if (w(i) > w(i + 1)) {
                    if (d != schubert(w * Permutation::simple(i))) ok = false;
                } else if (!d.is_zero()) ok = false;
            }
        } while (std::next_permutation(line.begin(), line.end()));
        report("recurrence.eq2.1[S5]", ok);
    }
    // Eq (2.3) on F_max
    {
        bool ok = true;
        for_each_fpf(opt.max, [&](const FpfInvolution& z) {
            Poly f = fpf_schubert(z);
            for (int i = 1; i <= opt.max + 2 && ok; ++i) {
                Poly d = divided_difference(f, i);
                if (z(i) > z(i + 1) && z(i) != i + 1) {
                    if (d != fpf_schubert(z.conjugated(i, i + 1))) ok = false;
                } else if (!d.is_zero()) ok = false;
            }
        });
        report("recurrence.eq2.3[F" + std::to_string(opt.max) + "]", ok);
    }
}

void verify_transition_suite(const Options& opt) {
    {
        FpfInvolution y = parse_involution("(1,2)(3,7)(4,5)(6,8)");
        TransitionReport r = verify_transition(y, 3, 7);
        report("transition.worked-example", r.poly_identity && r.series_identity);
    }
    std::vector<FpfInvolution> all;
    for_each_fpf(opt.max, [&](const FpfInvolution& z) { all.push_back(z); });
    std::mt19937 rng(20260810u);
    bool ok = true;
    int literal = 0;
    for (int c = 0; c < 100; ++c) {
        const FpfInvolution& y = all[rng() % all.size()];
        auto cyc = y.cycles_on(opt.max);
        auto [p, q] = cyc[rng() % cyc.size()];
        TransitionReport r = verify_transition(y, p, q);
        if (!(r.poly_identity && r.series_identity)) ok = false;
        if (r.series_literal) ++literal;
    }
    report("transition.random[100 over F" + std::to_string(opt.max) + "]", ok,
           std::to_string(literal) + " literal series comparisons");
}

void verify_pfaffian_suite(const Options& opt) {
    {  // methods agree on a random integer skew matrix, and pf^2 = det territory
        std::mt19937 rng(20260810u);
        bool ok = true;
        for (int n : {2, 4, 6, 8}) {
            SkewMatrix<Poly> A(n);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Poly e(static_cast<long>(rng() % 7) - 3);
                    if (rng() % 3 == 0) e += Poly::var(1 + static_cast<int>(rng() % 3));
                    A.at(i, j) = e;
                }
            if (pfaffian(A, PfaffianMethod::matching_sum) !=
                pfaffian(A, PfaffianMethod::row_expansion))
                ok = false;
        }
        report("pfaffian.methods-agree[dim<=8]", ok);
    }
    {
        bool ok = grassmannian_pfaffian_check({1, 2, 3}, 4, PfaffianTarget::schubert).matches;
        report("pfaffian.worked-example[phi=123,n=4]", ok);
    }
    {
        int nmax = std::min(5, opt.max);
        bool ok = true;
        long cases = 0;
        for (int n = 2; n <= nmax; ++n)
            for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
                std::vector<int> phi;
                for (int b = 1; b < n; ++b)
                    if (mask & (1 << (b - 1))) phi.push_back(b);
                ++cases;
                if (!grassmannian_pfaffian_check(phi, n, PfaffianTarget::schubert).matches) ok = false;
                int N = opt.trunc;
                if (!grassmannian_pfaffian_check(phi, n, PfaffianTarget::stanley, N).matches) ok = false;
            }
        report("pfaffian.grassmannian-identities[n<=" + std::to_string(nmax) + "]", ok,
               std::to_string(cases) + " phi choices, schubert+stanley");
    }
}

void verify_atoms_suite(const Options& opt) {
    int nmax = std::min(8, opt.max);
    bool ok = true;
    for (int n = 2; n <= nmax; n += 2)
        for_each_fpf(n, [&](const FpfInvolution& z) {
            if (atoms(z, AtomMode::closure).atoms != atoms(z, AtomMode::bruteforce).atoms) ok = false;
        });
    report("atoms.closure==bruteforce[F<=" + std::to_string(nmax) + "]", ok);
}

void verify_maps_suite(const Options& opt) {
    bool ok_fi = true, ok_vis = true, ok_code = true, ok_lt = true, ok_dom = true, ok_pi = true;
    for_each_fpf(opt.max, [&](const FpfInvolution& z) {
        if (map_F(map_I(z)) != z) ok_fi = false;
        Permutation bm = beta_min(z);
        auto vis = visible_data(z);
        std::set<std::pair<int, int>> inv_bm;
        for (int i = 1; i <= opt.max; ++i)
            for (int j = i + 1; j <= opt.max; ++j)
                if (bm(i) > bm(j)) inv_bm.insert({i, j});
        if (vis.inversions != inv_bm) ok_vis = false;
        auto dd = fpf_diagram_code_shape(z);
        if (dd.code != diagram_code_shape(bm).code) ok_code = false;
        Poly f = fpf_schubert(z);
        auto [ltm, ltc] = f.least_term();
        Monomial want;
        for (std::size_t i = 0; i < dd.code.size(); ++i)
            if (dd.code[i]) want.set_exp(static_cast<int>(i) + 1, dd.code[i]);
        if (!(ltm == want && ltc == 1)) ok_lt = false;
        auto cls = classify(z);
        if (cls.is_dominant && f != fpf_dominant_product(z)) ok_dom = false;
        if (cls.is_grassmannian && !cls.data->phi.empty()) {
            if (f != grassmannian_schubert_via_pi(cls.data->phi, cls.data->n)) ok_pi = false;
        }
    });
    std::string suff = "[F" + std::to_string(opt.max) + "]";
    report("maps.F-of-I-identity" + suff, ok_fi);
    report("maps.visible==Inv(beta_min)" + suff, ok_vis);
    report("maps.fpf-code==code(beta_min)" + suff, ok_code);
    report("schubert.least-term-law" + suff, ok_lt);
    report("schubert.dominant-product" + suff, ok_dom);
    report("schubert.grassmannian-via-pi" + suff, ok_pi);
}

void verify_stanley_suite(const Options& opt) {
    int nmax = std::min(6, opt.max);
    bool ok = true;
    for (int n = 2; n <= nmax; n += 2)
        for_each_fpf(n, [&](const FpfInvolution& z) {
            int N = std::max<long>(ell_fpf(z), 1);
            if (fpf_stanley_trunc(z, N, StanleyMode::atoms) !=
                fpf_stanley_trunc(z, N, StanleyMode::words))
                ok = false;
        });
    report("stanley.words==atoms[F<=" + std::to_string(nmax) + "]", ok);
    {
        bool ok2 = true;
        for_each_fpf(std::min(6, opt.max), [&](const FpfInvolution& z) {
            int N = std::max<long>(ell_fpf(z), 1);
            FpfInvolution zs = z.shifted(2);
            if (fpf_stanley_trunc(z, N) != fpf_stanley_trunc(zs, N)) ok2 = false;
        });
        report("stanley.shift-invariance[F6]", ok2);
    }
}

void verify_tree_suite(const Options& opt) {
    bool ok_psi = true, ok_tri = true, ok_desc = true;
    for_each_fpf(opt.max, [&](const FpfInvolution& z) {
        if (!z.is_theta()) {
            EtaData e = eta(z);
            auto pp = psi_plus(e.y, e.q);
            if (pp.size() != 1 || pp[0] != z) ok_psi = false;
            for (const FpfInvolution& v : tree_children(z))
                for (auto& [q1, r1] : visible_data(v).inversions)
                    if (!(q1 < e.q || r1 < e.r)) ok_desc = false;
        }
        if (!triangularity_report(z).pass()) ok_tri = false;
    });
    std::string suff = "[F" + std::to_string(opt.max) + "]";
    report("tree.psi-plus-of-eta-singleton" + suff, ok_psi);
    report("tree.child-inversion-bound" + suff, ok_desc);
    report("tree.triangularity" + suff, ok_tri);
}

void verify_vexillary_suite(const Options& opt) {
    int nmax = std::min(8, opt.max);
    bool ok = true;
    for_each_fpf(nmax, [&](const FpfInvolution& z) {
        if (is_fpf_vexillary(z, VexMode::pattern).vexillary !=
            is_fpf_vexillary(z, VexMode::oracle).vexillary)
            ok = false;
    });
    report("vexillary.pattern==oracle[F" + std::to_string(nmax) + "]", ok);
}

int cmd_verify(const std::string& suite, const Options& opt) {
    g_failures = 0;
    g_json_report = (opt.format == "json");
    g_report = Json::array();
    bool all = (suite == "all");
    if (all || suite == "recurrence") verify_recurrence(opt);
    if (all || suite == "transition") verify_transition_suite(opt);
    if (all || suite == "pfaffian") verify_pfaffian_suite(opt);
    if (all || suite == "atoms") verify_atoms_suite(opt);
    if (all || suite == "maps") verify_maps_suite(opt);
    if (all || suite == "stanley") verify_stanley_suite(opt);
    if (all || suite == "tree") verify_tree_suite(opt);
    if (all || suite == "vexillary") verify_vexillary_suite(opt);
    if (g_json_report) {
        Json out;
        out["suite"] = suite;
        out["max"] = opt.max;
        out["failures"] = g_failures;
        out["checks"] = g_report;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (g_failures ? "FAILED" : "passed") << " (" << g_failures << " failures)\n";
    }
    return g_failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FPF-involution Schubert calculus toolkit"};
    app.require_subcommand(1);

    Options opt;
    std::string target, mode = "closure", vmode = "pattern", stat = "grassmannian",
                suite = "all";
    bool count_only = false;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", opt.format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    auto* expand = app.add_subcommand("expand", "Schur P expansion of F^fpf_z");
    expand->add_option("involution", target, "matching, e.g. \"(1,4)(2,3)\" or \"4321\"")->required();
    add_format(expand);
    expand->add_option("--depth-limit", opt.depth_limit, "LS tree safety depth");

    auto* schub = app.add_subcommand("schubert", "FPF-involution Schubert polynomial");
    schub->add_option("involution", target)->required();
    add_format(schub);

    auto* words = app.add_subcommand("words", "FPF reduced words, one per line");
    words->add_option("involution", target)->required();
    words->add_flag("--count", count_only, "print the exact count instead");

    auto* atomsc = app.add_subcommand("atoms", "atom set A_fpf(z)");
    atomsc->add_option("involution", target)->required();
    atomsc->add_option("--mode", mode)->check(CLI::IsMember({"closure", "bruteforce"}));
    add_format(atomsc);

    auto* tree = app.add_subcommand("tree", "Lascoux-Schutzenberger tree as DOT");
    tree->add_option("involution", target)->required();
    tree->add_option("--depth-limit", opt.depth_limit);

    auto* vex = app.add_subcommand("vexillary", "FPF-vexillary test");
    vex->add_option("involution", target)->required();
    vex->add_option("--mode", vmode)->check(CLI::IsMember({"pattern", "oracle"}));
    add_format(vex);

    auto* verify = app.add_subcommand("verify", "cross-check suites");
    verify->add_option("suite", suite)
        ->check(CLI::IsMember({"all", "recurrence", "transition", "pfaffian", "atoms", "maps",
                               "stanley", "tree", "vexillary"}));
    verify->add_option("--max", opt.max, "largest F_n to sweep (even)");
    verify->add_option("--trunc", opt.trunc, "series truncation override");
    add_format(verify);

    auto* census = app.add_subcommand("census", "sequence tables over F_n");
    census->add_option("--stat", stat)
        ->check(CLI::IsMember({"grassmannian", "vexillary", "visible-descents", "rhat"}))
        ->required();
    census->add_option("--max", opt.max, "largest n (even)");
    census->add_option("--threads", opt.threads, "worker threads");
    add_format(census);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expand->parsed()) return cmd_expand(target, opt);
        if (schub->parsed()) return cmd_schubert(target, opt);
        if (words->parsed()) return cmd_words(target, count_only);
        if (atomsc->parsed()) return cmd_atoms(target, mode, opt);
        if (tree->parsed()) return cmd_tree(target, opt);
        if (vex->parsed()) return cmd_vexillary(target, vmode, opt);
        if (verify->parsed()) return cmd_verify(suite, opt);
        if (census->parsed()) return cmd_census(stat, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
