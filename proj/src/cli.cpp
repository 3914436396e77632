#include "signed_spectra/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "signed_spectra/charpoly.hpp"
#include "signed_spectra/formulas.hpp"
#include "signed_spectra/graph_io.hpp"
#include "signed_spectra/harness.hpp"
#include "signed_spectra/linalg.hpp"
#include "signed_spectra/matrices.hpp"
#include "signed_spectra/search.hpp"
#include "signed_spectra/trees.hpp"

namespace signed_spectra {

namespace {

using nlohmann::ordered_json;

std::string fixed9(double x) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(9) << x;
    std::string s = ss.str();
    if (s == "-0.000000000") s = "0.000000000";
    return s;
}

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return ordered_json{{"n", m.rows()}, {"rows", rows}};
}

ordered_json spectrum_json(const Spectrum& s) {
    ordered_json vals = ordered_json::array();
    for (int i = 0; i < s.size(); ++i) vals.push_back(fixed9(s.values(i)));
    return vals;
}

std::string spectrum_line(const Spectrum& s, char sep = ' ') {
    std::string line;
    for (int i = 0; i < s.size(); ++i) {
        if (i) line += sep;
        line += fixed9(s.values(i));
    }
    return line;
}

ordered_json coeff_json(const IntPolynomial& p) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.c) coeffs.push_back(c.str());
    return coeffs;
}

int default_jobs() {
    if (const char* env = std::getenv("SIGNED_SPECTRA_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

int cmd_spectrum(const std::string& path, const std::string& format, std::ostream& out) {
    SignedGraph g = read_edge_list_file(path);
    Spectrum sa = eigenvalues_symmetric(adjacency_matrix(g));
    auto [dmax, dmin] = distance_matrices(g);
    Spectrum smax = eigenvalues_symmetric(dmax), smin = eigenvalues_symmetric(dmin);
    if (format == "json") {
        ordered_json j{{"n", g.order()},
                       {"a", spectrum_json(sa)},
                       {"dmax", spectrum_json(smax)},
                       {"dmin", spectrum_json(smin)}};
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << "a," << spectrum_line(sa, ',') << "\n";
        out << "dmax," << spectrum_line(smax, ',') << "\n";
        out << "dmin," << spectrum_line(smin, ',') << "\n";
    } else {
        out << "n = " << g.order() << "\n";
        out << "A:    " << spectrum_line(sa) << "\n";
        out << "Dmax: " << spectrum_line(smax) << "\n";
        out << "Dmin: " << spectrum_line(smin) << "\n";
    }
    return 0;
}

int cmd_distance(const std::string& path, const std::string& format, std::ostream& out) {
    SignedGraph g = read_edge_list_file(path);
    auto [dmax, dmin] = distance_matrices(g);
    CompatibilityResult comp = compatible_distance_matrix(g);
    if (format == "json") {
        ordered_json j{{"n", g.order()},
                       {"dmax", matrix_json(dmax)},
                       {"dmin", matrix_json(dmin)},
                       {"compatible", comp.compatible()}};
        if (comp.compatible()) {
            j["dpm"] = matrix_json(*comp.dpm);
        } else {
            ordered_json pairs = ordered_json::array();
            for (auto [u, v] : comp.incompatible) pairs.push_back(ordered_json::array({u, v}));
            j["incompatible_pairs"] = pairs;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "Dmax:\n" << matrix_to_text(dmax);
        out << "Dmin:\n" << matrix_to_text(dmin);
        if (comp.compatible()) {
            out << "compatible: yes\n";
        } else {
            out << "compatible: no; incompatible pairs:";
            for (auto [u, v] : comp.incompatible) out << " {" << u << "," << v << "}";
            out << "\n";
        }
    }
    return 0;
}

int cmd_balance(const std::string& path, const std::string& format, std::ostream& out) {
    SignedGraph g = read_edge_list_file(path);
    SwitchingCertificate cert = is_balanced(g);
    if (format == "json") {
        ordered_json j{{"n", g.order()}, {"balanced", cert.balanced}};
        if (cert.balanced)
            j["theta"] = cert.theta;
        else
            j["negative_cycle"] = cert.negative_cycle;
        out << j.dump(2) << "\n";
    } else if (cert.balanced) {
        out << "balanced\ntheta:";
        for (int t : cert.theta) out << " " << (t > 0 ? "+" : "-");
        out << "\n";
    } else {
        out << "unbalanced\nnegative cycle:";
        for (int v : cert.negative_cycle) out << " " << v;
        out << "\n";
    }
    return 0;
}

int cmd_charpoly(const std::string& path, const std::string& which, const std::string& format,
                 std::ostream& out, std::ostream& err) {
    SignedGraph g = read_edge_list_file(path);
    IntMatrix m;
    if (which == "a") {
        m = adjacency_matrix(g);
    } else if (which == "dmax") {
        m = distance_matrices(g).first;
    } else if (which == "dmin") {
        m = distance_matrices(g).second;
    } else {  // dpm
        CompatibilityResult comp = compatible_distance_matrix(g);
        if (!comp.compatible()) {
            err << "error: graph is not compatible, no D+- matrix\n";
            return 2;
        }
        m = *comp.dpm;
    }
    IntPolynomial p = char_poly_exact(m);
    if (format == "json") {
        ordered_json j{{"n", g.order()}, {"matrix", which}, {"coefficients", coeff_json(p)}};
        out << j.dump(2) << "\n";
    } else {
        out << p.to_string("x") << "\n";
        out << "coefficients (ascending):";
        for (const auto& c : p.c) out << " " << c.str();
        out << "\n";
    }
    return 0;
}

int cmd_formula(const std::string& name, const std::vector<int>& params, std::ostream& out,
                std::ostream& err) {
    ordered_json j{{"name", name}};
    auto verdict = [](const IntPolynomial& formula, const IntPolynomial& oracle) {
        return formula == oracle ? "matches-exact-charpoly" : "rejected";
    };
    if (name == "double-star") {
        if (params.size() != 3) { err << "usage: formula double-star n s t\n"; return 2; }
        int n = params[0], s = params[1], t = params[2];
        IntPolynomial f = charpoly_double_star(n, s, t);
        IntPolynomial oracle = char_poly_exact(adjacency_matrix(complete_with_negative_subgraph(
            n, double_star(s, t).edges)));
        j["coefficients"] = coeff_json(f);
        j["verdict"] = verdict(f, oracle);
    } else if (name == "linked-stars") {
        if (params.size() != 3) { err << "usage: formula linked-stars n a b\n"; return 2; }
        int n = params[0], a = params[1], b = params[2];
        IntPolynomial oracle = char_poly_exact(adjacency_matrix(complete_with_negative_subgraph(
            n, linked_stars(a, b).edges)));
        IntPolynomial stated = charpoly_linked_stars(n, a, b, ClosedFormVariant::as_printed);
        IntPolynomial proof = charpoly_linked_stars(n, a, b, ClosedFormVariant::resolved);
        j["variants"] = ordered_json::array(
            {ordered_json{{"variant", "as-printed"},
                          {"coefficients", coeff_json(stated)},
                          {"verdict", verdict(stated, oracle)}},
             ordered_json{{"variant", "resolved"},
                          {"coefficients", coeff_json(proof)},
                          {"verdict", verdict(proof, oracle)}}});
    } else if (name == "s-plus") {
        if (params.size() != 2) { err << "usage: formula s-plus n tri_sign\n"; return 2; }
        int n = params[0], tri = params[1];
        CompatibilityResult comp = compatible_distance_matrix(s_plus_graph(n, tri, 0));
        IntPolynomial oracle = char_poly_exact(*comp.dpm);
        IntPolynomial resolved = charpoly_s_plus(n, tri, ClosedFormVariant::resolved);
        IntPolynomial printed = charpoly_s_plus(n, tri, ClosedFormVariant::as_printed);
        j["variants"] = ordered_json::array(
            {ordered_json{{"variant", "as-printed"},
                          {"coefficients", coeff_json(printed)},
                          {"verdict", verdict(printed, oracle)}},
             ordered_json{{"variant", "resolved"},
                          {"coefficients", coeff_json(resolved)},
                          {"verdict", verdict(resolved, oracle)}}});
    } else if (name == "distance-bound") {
        if (params.size() != 1) { err << "usage: formula distance-bound d\n"; return 2; }
        int d = params[0];
        j["d"] = d;
        j["bound"] = fixed9(distance_bound(d));
        if (d >= 4) j["balanced_bound"] = fixed9(balanced_distance_bound(d));
    } else {
        err << "unknown formula: " << name
            << " (expected double-star | linked-stars | s-plus | distance-bound)\n";
        return 2;
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_search(int n, const std::string& objective, int jobs, bool cap_override,
               std::ostream& out) {
    SearchOptions opts;
    opts.jobs = jobs;
    opts.cap_override = cap_override;
    ExtremalResult res = extremal_tree_search(n, objective_from_string(objective), opts);
    ordered_json j{{"objective", to_string(res.objective)},
                   {"n", res.n},
                   {"optimum", fixed9(res.optimum)},
                   {"witnesses", res.witnesses},
                   {"trees_scanned", res.trees_scanned}};
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials, bool include_n6,
               const std::string& out_path, const std::string& format, std::ostream& out,
               std::ostream& err) {
    std::vector<VerificationReport> reports;
    auto timed = [&](auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        VerificationReport rep = fn();
        rep.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        err << rep.suite << ": " << static_cast<int>(rep.elapsed_ms) << " ms\n";
        reports.push_back(std::move(rep));
    };
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    if (want("proof-matrices")) timed([] { return verify_proof_matrices(); });
    if (want("forbidden-subgraphs")) timed([] { return verify_forbidden_subgraphs(); });
    if (want("classification")) timed([&] { return verify_classification(include_n6); });
    if (want("monotonicity")) timed([&] { return verify_monotonicity_lemmas(trials, seed); });
    if (want("diameter")) {
        DiameterScanOptions opts;
        opts.seed = seed;
        for (int d : {2, 3}) timed([&] { return diameter_bound_scan(6, d, opts); });
        for (int d : {4, 5}) timed([&] { return diameter_bound_scan(10, d, opts); });
    }
    if (reports.empty()) {
        err << "unknown suite: " << suite << "\n";
        return 2;
    }

    bool violated = false;
    ordered_json all = ordered_json::array();
    for (const auto& rep : reports) {
        violated = violated || rep.any_violated();
        all.push_back(ordered_json::parse(rep.to_json()));
        if (format != "json") {
            for (const auto& c : rep.claims)
                out << "[" << to_string(c.status) << "] " << rep.suite << "/" << c.id
                    << (c.details.empty() ? "" : ": " + c.details) << "\n";
        }
    }
    std::string json_text = all.dump(2) + "\n";
    if (format == "json") out << json_text;
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            err << "cannot write " << out_path << "\n";
            return 2;
        }
        f << json_text;
    }
    return violated ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"signed graph spectra toolkit"};
    app.require_subcommand(1);

    std::string file, format = "text", matrix = "a", objective = "max-rho";
    std::string suite = "all", out_path, formula_name;
    std::vector<int> formula_params;
    int n = 6, jobs = default_jobs(), trials = 200;
    std::uint64_t seed = 20250810;
    bool cap_override = false, include_n6 = false;

    auto* sp = app.add_subcommand("spectrum", "eigenvalues of A, Dmax, Dmin");
    sp->add_option("file", file)->required();
    sp->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* di = app.add_subcommand("distance", "distance matrices and compatibility");
    di->add_option("file", file)->required();
    di->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* ba = app.add_subcommand("balance", "balance certificate");
    ba->add_option("file", file)->required();
    ba->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* ch = app.add_subcommand("charpoly", "exact characteristic polynomial");
    ch->add_option("file", file)->required();
    ch->add_option("--matrix", matrix)->check(CLI::IsMember({"a", "dmax", "dmin", "dpm"}));
    ch->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* fo = app.add_subcommand("formula", "closed form plus oracle verdict");
    fo->add_option("name", formula_name)->required();
    fo->add_option("params", formula_params);

    auto* se = app.add_subcommand("search", "extremal spanning-tree search");
    se->add_option("--n", n)->required();
    se->add_option("--objective", objective)
        ->check(CLI::IsMember({"max-lambda1", "min-lambdan", "max-rho"}));
    se->add_option("--jobs", jobs);
    se->add_flag("--cap-override", cap_override);

    auto* ve = app.add_subcommand("verify", "verification suites");
    ve->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "proof-matrices", "forbidden-subgraphs", "classification",
                               "monotonicity", "diameter"}));
    ve->add_option("--seed", seed);
    ve->add_option("--trials", trials);
    ve->add_option("--out", out_path);
    ve->add_flag("--include-n6", include_n6);
    ve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::vector<const char*> argv;
    argv.push_back("signed-spectra");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sp->parsed()) return cmd_spectrum(file, format, out);
        if (di->parsed()) return cmd_distance(file, format, out);
        if (ba->parsed()) return cmd_balance(file, format, out);
        if (ch->parsed()) return cmd_charpoly(file, matrix, format, out, err);
        if (fo->parsed()) return cmd_formula(formula_name, formula_params, out, err);
        if (se->parsed()) return cmd_search(n, objective, jobs, cap_override, out);
        if (ve->parsed())
            return cmd_verify(suite, seed, trials, include_n6, out_path, format, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace signed_spectra
