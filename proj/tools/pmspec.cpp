// pmspec: construct, certify, and probe extremal symmetric +-1 matrices and
// graphs from the command line. Machine output goes to stdout, diagnostics to
// stderr. Every file written gets a sibling <stem>.manifest.json recording
// the tool version, arguments, and input/output digests.
//
// Exit codes: 0 success; 2 precondition or validation failure; 3
// certification failure; 4 budget exhaustion; 64 unknown subcommand.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pmspec/common.hpp"
#include "pmspec/constructions.hpp"
#include "pmspec/graph_factory.hpp"
#include "pmspec/hadamard.hpp"
#include "pmspec/int_matrix.hpp"
#include "pmspec/latin.hpp"
#include "pmspec/matrix_io.hpp"
#include "pmspec/property_lab.hpp"
#include "pmspec/report.hpp"
#include "pmspec/search.hpp"
#include "pmspec/spectra.hpp"
#include "pmspec/srg_bounds.hpp"

namespace {

using namespace pmspec;

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitCertification = 3;
constexpr int kExitBudget = 4;
constexpr int kExitUnknownCommand = 64;

// Collects the files a run touched and writes one manifest per output.
class RunRecorder {
public:
    RunRecorder(std::string subcommand, int argc, char** argv) : subcommand_(std::move(subcommand)) {
        for (int i = 0; i < argc; ++i) argv_.emplace_back(argv[i]);
        start_ = std::chrono::steady_clock::now();
    }

    std::string read_input(const std::string& path) {
        const std::string content = read_file(path);
        inputs_[path] = fnv1a64_hex(content);
        return content;
    }

    void write_output(const std::string& path, const std::string& content) {
        write_file(path, content);
        outputs_[path] = fnv1a64_hex(content);
    }

    void finalize() {
        if (outputs_.empty()) return;
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        json manifest;
        manifest["tool_version"] = kToolVersion;
        manifest["subcommand"] = subcommand_;
        manifest["argv"] = argv_;
        manifest["inputs"] = inputs_;
        manifest["outputs"] = outputs_;
        manifest["wall_time_seconds"] = round12(wall);
        const std::string text = manifest.dump(2) + "\n";
        for (const auto& [path, digest] : outputs_) {
            (void)digest;
            std::string stem = path;
            const auto slash = stem.find_last_of('/');
            const auto dot = stem.find_last_of('.');
            if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) stem = stem.substr(0, dot);
            write_file(stem + ".manifest.json", text);
        }
    }

private:
    std::string subcommand_;
    std::vector<std::string> argv_;
    std::map<std::string, std::string> inputs_;
    std::map<std::string, std::string> outputs_;
    std::chrono::steady_clock::time_point start_;
};

PmOneMatrix load_pmm(RunRecorder& rec, const std::string& path) {
    return pmm_from_string(rec.read_input(path));
}

Graph load_adj(RunRecorder& rec, const std::string& path) {
    return adj_from_string(rec.read_input(path));
}

int cmd_construct(RunRecorder& rec, const std::string& family, i64 s, std::optional<i64> n,
                  const std::string& out) {
    Family fam;
    if (family == "thkhn") fam = Family::thkhn;
    else if (family == "thj") fam = Family::thj;
    else if (family == "thj1") fam = Family::thj1;
    else throw precondition_error("unknown family: " + family);

    const Construction c = build_family(fam, s, n);
    rec.write_output(out, to_pmm(c.matrix));
    if (!c.inertia_note.empty()) std::cerr << "note: " << c.inertia_note << "\n";
    json j = to_json(c);
    j["out"] = out;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_certify(RunRecorder& rec, const std::string& file, i64 k, bool use_float,
                const std::string& report_path) {
    const PmOneMatrix b = load_pmm(rec, file);
    const SkCertificate cert = sk_certify(b, k, use_float ? CertifyMode::floating : CertifyMode::exact);
    const json j = to_json(cert);
    if (!report_path.empty()) rec.write_output(report_path, j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return cert.is_member() ? kExitOk : kExitCertification;
}

int cmd_spectrum(RunRecorder& rec, const std::string& file) {
    const std::string content = rec.read_input(file);
    Spectrum sp;
    if (content.rfind("PMM", 0) == 0) sp = eigen_sym(pmm_from_string(content));
    else if (content.rfind("ADJ", 0) == 0) sp = eigen_sym(adj_from_string(content));
    else throw parse_error("unrecognized matrix file (expected PMM or ADJ header): " + file);
    std::cout << to_json(sp).dump(2) << "\n";
    return kExitOk;
}

int cmd_graph(RunRecorder& rec, const std::string& transform, const std::string& from,
              const std::string& blowup_kind, const std::string& in, i64 t, int sign,
              const std::string& zero_diag, const std::string& out) {
    if (!transform.empty() && !blowup_kind.empty())
        throw precondition_error("choose either --transform or --blowup");
    if (!transform.empty()) {
        if (from.empty()) throw precondition_error("--transform needs --from FILE.pmm");
        const PmOneMatrix b = load_pmm(rec, from);
        if (transform == "half-shift") {
            const ZeroDiag zd = zero_diag == "force" ? ZeroDiag::force : ZeroDiag::automatic;
            if (zero_diag != "auto" && zero_diag != "force")
                throw precondition_error("--zero-diag must be auto or force");
            const Graph g = half_shift(b, t, sign, zd);
            rec.write_output(out, to_adj(g));
            std::cout << json{{"transform", "half-shift"}, {"order", g.order()}, {"out", out}}.dump(2) << "\n";
            return kExitOk;
        }
        if (transform == "double") {
            const PmOneMatrix d = doubling(b);
            rec.write_output(out, to_pmm(d)); // doubling yields a +-1 matrix, so PMM
            std::cout << json{{"transform", "double"}, {"order", d.order()}, {"out", out}}.dump(2) << "\n";
            return kExitOk;
        }
        throw precondition_error("unknown transform: " + transform);
    }
    if (!blowup_kind.empty()) {
        if (in.empty()) throw precondition_error("--blowup needs --in FILE.adj");
        if (blowup_kind != "open" && blowup_kind != "closed")
            throw precondition_error("--blowup must be open or closed");
        const Graph g = load_adj(rec, in);
        const Graph b = blowup(g, {t, blowup_kind == "closed"});
        rec.write_output(out, to_adj(b));
        std::cout << json{{"blowup", blowup_kind}, {"t", t}, {"order", b.order()}, {"out", out}}.dump(2) << "\n";
        return kExitOk;
    }
    throw precondition_error("graph: nothing to do (use --transform or --blowup)");
}

int cmd_construct_graph(RunRecorder& rec, const std::string& family, i64 s, i64 t, i64 k,
                        std::optional<i64> n, const std::string& in, const std::string& out,
                        const std::string& out_complement) {
    if (family == "thp") {
        const GraphBuild gb = build_thp(s, t, n);
        rec.write_output(out, to_adj(gb.graph));
        json j{{"recipe", gb.recipe}, {"order", gb.graph.order()}, {"out", out}};
        j["expected_spectrum"] = expected_spectrum_json(gb.expected_spectrum);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    if (family == "thck") {
        const KyFanBuild kb = build_thck_kyfan(s, t, n);
        rec.write_output(out, to_adj(kb.build.graph));
        json j{{"recipe", kb.build.recipe}, {"order", kb.build.graph.order()}, {"out", out}};
        j["expected_spectrum"] = expected_spectrum_json(kb.build.expected_spectrum);
        j["ky_fan_k"] = kb.k;
        j["ky_fan_attained"] = kb.attained.str();
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    if (family == "thck1") {
        if (in.empty()) throw precondition_error("thck1 needs --in FILE.pmm (a certified regular member)");
        const PmOneMatrix b = load_pmm(rec, in);
        const ThCk1Build tb = build_thck1(b, k, t);
        rec.write_output(out, to_adj(tb.graph));
        json j{{"recipe", tb.recipe}, {"order", tb.graph.order()}, {"out", out}};
        j["ky_fan_k"] = tb.k;
        j["ky_fan_lower_bound"] = round12(tb.kyfan_lower_bound);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    if (family == "kyfan-hadamard") {
        const PmOneMatrix h = in.empty() ? regular_hadamard_order4() : load_pmm(rec, in);
        const i64 copies = n.value_or(1);
        const GraphBuild gb = build_kyfan_hadamard(h, copies);
        rec.write_output(out, to_adj(gb.graph));
        json j{{"recipe", gb.recipe}, {"order", gb.graph.order()}, {"out", out}};
        j["expected_spectrum"] = expected_spectrum_json(gb.expected_spectrum);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    if (family == "thng") {
        const NgPair pair = build_thng_pair(k, t);
        rec.write_output(out, to_adj(pair.graph));
        if (out_complement.empty()) throw precondition_error("thng needs --out-complement FILE.adj");
        rec.write_output(out_complement, to_adj(pair.graph_complement));
        const double top = lambda_k(pair.graph, k + 1) + lambda_k(pair.graph_complement, k + 1);
        const i64 order = pair.graph.order();
        const double bottom = std::abs(lambda_from_bottom(pair.graph.sym(), k)) +
                              std::abs(lambda_from_bottom(pair.graph_complement.sym(), k));
        (void)order;
        json j{{"recipe", pair.recipe}, {"order", pair.graph.order()}, {"out", out},
               {"out_complement", out_complement}};
        j["bound_top"] = round12(pair.bound_top);
        j["bound_bottom"] = round12(pair.bound_bottom);
        j["achieved_top"] = round12(top);
        j["achieved_bottom"] = round12(bottom);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    throw precondition_error("unknown graph family: " + family);
}

int cmd_bounds(const std::string& name, i64 k, std::optional<i64> n, const std::string& table, i64 k_max) {
    if (!table.empty()) {
        if (k_max < 2) throw precondition_error("--k-max must be at least 2");
        json rows = json::array();
        for (i64 kk = 2; kk <= k_max; ++kk) {
            json row{{"k", kk}};
            if (table == "ck") {
                row["upper"] = bound_value_json(ub_ck(kk));
                if (kk >= 5) row["lower"] = bound_value_json(lb_ck_explicit(kk));
            } else if (table == "ckstar") {
                if (kk >= 3) {
                    const auto br = bracket_ckstar(kk);
                    row["upper"] = bound_value_json(br[0]);
                    row["lower"] = bound_value_json(br[1]);
                } else {
                    row["upper"] = bound_value_json(ub_ckstar(kk));
                    row["lower"] = bound_value_json(ub_ckstar(kk)); // equality at k = 2
                }
            } else if (table == "ng") {
                const auto br = ng_bracket(kk);
                row["upper"] = bound_value_json(br[0]);
                row["lower"] = bound_value_json(br[1]);
            } else if (table == "kyfan") {
                row["upper_per_order"] = round12(0.5 * (1.0 + std::sqrt(double(kk))));
                row["lower_per_order"] = round12(0.5 * std::sqrt(double(kk)));
            } else {
                throw precondition_error("unknown table: " + table);
            }
            rows.push_back(row);
        }
        std::cout << json{{"table", table}, {"rows", rows}}.dump(2) << "\n";
        return kExitOk;
    }
    if (name.empty()) throw precondition_error("bounds: need --name or --table");
    const auto reports = evaluate_bound(name, k, n);
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    std::cout << (arr.size() == 1 ? arr[0] : json{{"name", name}, {"reports", arr}}).dump(2) << "\n";
    return kExitOk;
}

int cmd_search(RunRecorder& rec, i64 k, i64 order, i64 budget, const std::string& resume_path,
               bool no_symmetry) {
    const Feasibility feas = feasibility_filter(k, order);
    if (!feas.feasible) {
        std::cerr << "obstructed: " << feas.reason << "\n";
        std::cout << obstructed_json(feas).dump(2) << "\n";
        return kExitOk;
    }
    SearchConfig cfg;
    cfg.k = k;
    cfg.order = order;
    cfg.budget = budget;
    cfg.symmetry_reduction = !no_symmetry;
    if (!resume_path.empty()) {
        std::ifstream probe(resume_path);
        if (probe.good()) {
            cfg.resume_token = rec.read_input(resume_path);
            while (!cfg.resume_token.empty() && cfg.resume_token.back() == '\n') cfg.resume_token.pop_back();
            std::cerr << "resuming from " << resume_path << "\n";
        }
    }
    std::cerr << "searching S_" << k << " at order " << order << ", budget " << budget << " nodes\n";
    const SearchResult res = search_sk(cfg);
    std::cerr << search_status_name(res.status) << " after " << res.nodes_expanded << " nodes\n";
    if (res.status == SearchStatus::budget_exceeded && !resume_path.empty())
        rec.write_output(resume_path, res.resume_token + "\n");
    std::cout << to_json(res, &feas).dump(2) << "\n";
    return res.status == SearchStatus::budget_exceeded ? kExitBudget : kExitOk;
}

int cmd_lab(const std::string& property, i64 n_max, i64 samples, std::uint64_t seed) {
    PropertyRun run;
    if (property == "lob") run = check_lob(2, n_max > 0 ? n_max : 7, samples, seed);
    else if (property == "lob3") run = check_lob(3, n_max > 0 ? n_max : 12, samples, seed);
    else if (property == "weyl") run = check_weyl(n_max > 0 ? n_max : 6, samples, seed);
    else if (property == "th1_spro") run = check_th1_spro(n_max > 0 ? n_max : 6);
    else if (property == "ng_kyfan") run = check_ng_kyfan(n_max > 0 ? n_max : 6, samples, seed);
    else throw precondition_error("unknown property: " + property +
                                  " (expected lob, lob3, weyl, th1_spro, ng_kyfan)");
    std::cerr << run.property_name << ": " << run.graphs_checked << " graphs checked, "
              << run.violations.size() << " violations\n";
    std::cout << to_json(run).dump(2) << "\n";
    return run.clean() ? kExitOk : kExitCertification;
}

int cmd_latin(const std::string& type, i64 s, bool as_json) {
    LatinSquare l;
    if (type == "back-circulant") l = back_circulant(s);
    else if (type == "const-diag") l = const_diag_symmetric(s);
    else throw precondition_error("unknown latin square type: " + type);
    if (as_json) {
        json j{{"type", type}, {"s", s}, {"text", to_text(l)}};
        j["validation"] = to_json(validate(l));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_text(l);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal symmetric +-1 matrices and graphs: constructions, exact certificates, "
                 "spectra, closed-form bounds, and searches"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for all randomized components (default 0)");

    // construct
    std::string c_family, c_out;
    i64 c_s = 0;
    i64 c_n = -1;
    auto* construct = app.add_subcommand("construct", "build a +-1 block-construction family member");
    construct->add_option("--family", c_family, "thkhn (zero rowsums), thj (all-ones eigenvector), thj1 (rowsums -n)")->required();
    construct->add_option("--s", c_s, "block parameter; the result lands in S_{s^2}")->required();
    construct->add_option("--n", c_n, "block dimension (catalog Hadamard order); smallest admissible when omitted");
    construct->add_option("--out", c_out, "output PMM file")->required();

    // certify
    std::string ce_file, ce_report;
    i64 ce_k = 0;
    bool ce_exact = false, ce_float = false;
    auto* certify = app.add_subcommand("certify", "certify membership of a PMM matrix in S_k");
    certify->add_option("--k", ce_k, "class index k")->required();
    certify->add_flag("--exact", ce_exact, "integer-only certificate (default)");
    certify->add_flag("--float", ce_float, "floating singular-spectrum comparison");
    certify->add_option("--report", ce_report, "also write the certificate JSON to this file");
    certify->add_option("file", ce_file, "input PMM file")->required();

    // spectrum
    std::string sp_file;
    bool sp_json = true;
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, singular values, and Ky Fan sums of a PMM/ADJ file");
    spectrum->add_option("file", sp_file, "input PMM or ADJ file")->required();
    spectrum->add_flag("--json,!--no-json", sp_json, "JSON output (default on)");

    // graph
    std::string g_transform, g_from, g_blowup, g_in, g_zero_diag = "auto", g_out;
    i64 g_t = 1;
    int g_sign = 1;
    auto* graph = app.add_subcommand("graph", "matrix-to-graph and graph-to-graph transforms");
    graph->add_option("--transform", g_transform, "half-shift | double (PMM input)");
    graph->add_option("--from", g_from, "input PMM file for --transform");
    graph->add_option("--blowup", g_blowup, "open | closed (ADJ input)");
    graph->add_option("--in", g_in, "input ADJ file for --blowup");
    graph->add_option("--t", g_t, "blowup factor (default 1)");
    graph->add_option("--sign", g_sign, "+1 or -1 factor applied before the half-shift");
    graph->add_option("--zero-diag", g_zero_diag, "auto (diagonal must vanish) | force (zero it, costs <=1 per eigenvalue)");
    graph->add_option("--out", g_out, "output file")->required();

    // construct-graph
    std::string cg_family, cg_in, cg_out, cg_out_complement;
    i64 cg_s = 0, cg_t = 1, cg_k = 0, cg_n = -1;
    auto* cgraph = app.add_subcommand("construct-graph", "named extremal graph builders");
    cgraph->add_option("--family", cg_family, "thp | thng | thck | thck1 | kyfan-hadamard")->required();
    cgraph->add_option("--s", cg_s, "block parameter (thp, thck)");
    cgraph->add_option("--t", cg_t, "blowup factor (default 1)");
    cgraph->add_option("--k", cg_k, "class index (thng, thck1)");
    cgraph->add_option("--n", cg_n, "block dimension (thp, thck) or copies (kyfan-hadamard)");
    cgraph->add_option("--in", cg_in, "input PMM (thck1 member, or regular Hadamard for kyfan-hadamard)");
    cgraph->add_option("--out", cg_out, "output ADJ file")->required();
    cgraph->add_option("--out-complement", cg_out_complement, "complement output (thng)");

    // bounds
    std::string b_name, b_table;
    i64 b_k = 0, b_n = -1, b_kmax = 0;
    auto* bounds = app.add_subcommand("bounds", "closed-form bound evaluators and tables");
    bounds->add_option("--name", b_name, "one of: ub_ck ub_cmk ub_ckstar lb_ck_taylor lb_ck_general "
                                         "lb_ck_explicit bracket_ckstar ramsey_threshold ng_upper ng_bracket "
                                         "kyfan_upper tau_bracket umn_bounds kyfan_pm_bracket");
    bounds->add_option("--k", b_k, "class index");
    bounds->add_option("--n", b_n, "order, where the bound depends on it");
    bounds->add_option("--table", b_table, "ck | ckstar | ng | kyfan");
    bounds->add_option("--k-max", b_kmax, "largest k for --table");

    // search
    i64 s_k = 0, s_order = 0, s_budget = 10'000'000;
    std::string s_resume;
    bool s_nosym = false;
    auto* search = app.add_subcommand("search", "exhaustive S_k search at a fixed order");
    search->add_option("--k", s_k, "class index")->required();
    search->add_option("--order", s_order, "matrix order")->required();
    search->add_option("--budget", s_budget, "node-expansion cap (default 10^7)");
    search->add_option("--resume", s_resume, "frontier file: loaded when present, written on budget exhaustion");
    search->add_flag("--no-symmetry", s_nosym, "disable the signed-permutation reductions");

    // lab
    std::string l_property;
    i64 l_nmax = 0, l_samples = 0;
    auto* lab = app.add_subcommand("lab", "brute-force property verification runs");
    lab->add_option("--property", l_property, "lob | lob3 | weyl | th1_spro | ng_kyfan")->required();
    lab->add_option("--n-max", l_nmax, "largest exhaustive order");
    lab->add_option("--samples", l_samples, "random-universe sample count");
    bool l_json = true;
    lab->add_flag("--json,!--no-json", l_json, "JSON output (default on)");

    // latin
    std::string la_type;
    i64 la_s = 0;
    bool la_json = false;
    auto* latin = app.add_subcommand("latin", "symmetric Latin square generators");
    latin->add_option("--type", la_type, "back-circulant | const-diag")->required();
    latin->add_option("--s", la_s, "size")->required();
    latin->add_flag("--json", la_json, "emit JSON with a validation report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        // distinguish an unknown subcommand from other usage errors
        if (argc > 1 && argv[1][0] != '-') {
            const std::string first = argv[1];
            bool known = false;
            for (const auto* sc : app.get_subcommands({})) (void)sc;
            for (const auto& name : {"construct", "certify", "spectrum", "graph", "construct-graph",
                                     "bounds", "search", "lab", "latin"})
                if (first == name) known = true;
            if (!known) {
                std::cerr << "unknown subcommand: " << first << "\n";
                return kExitUnknownCommand;
            }
        }
        std::cerr << e.what() << "\n";
        return kExitPrecondition;
    }

    const std::string sub = app.get_subcommands().at(0)->get_name();
    RunRecorder rec(sub, argc, argv);
    int code = kExitOk;
    try {
        if (construct->parsed()) {
            code = cmd_construct(rec, c_family, c_s, c_n >= 0 ? std::optional<i64>(c_n) : std::nullopt, c_out);
        } else if (certify->parsed()) {
            if (ce_exact && ce_float) throw precondition_error("choose one of --exact / --float");
            code = cmd_certify(rec, ce_file, ce_k, ce_float, ce_report);
        } else if (spectrum->parsed()) {
            code = cmd_spectrum(rec, sp_file);
        } else if (graph->parsed()) {
            code = cmd_graph(rec, g_transform, g_from, g_blowup, g_in, g_t, g_sign, g_zero_diag, g_out);
        } else if (cgraph->parsed()) {
            code = cmd_construct_graph(rec, cg_family, cg_s, cg_t, cg_k,
                                       cg_n >= 0 ? std::optional<i64>(cg_n) : std::nullopt, cg_in, cg_out,
                                       cg_out_complement);
        } else if (bounds->parsed()) {
            code = cmd_bounds(b_name, b_k, b_n >= 0 ? std::optional<i64>(b_n) : std::nullopt, b_table, b_kmax);
        } else if (search->parsed()) {
            code = cmd_search(rec, s_k, s_order, s_budget, s_resume, s_nosym);
        } else if (lab->parsed()) {
            code = cmd_lab(l_property, l_nmax, l_samples > 0 ? l_samples : (l_property == "lob3" ? 10000 : 2000), seed);
        } else if (latin->parsed()) {
            code = cmd_latin(la_type, la_s, la_json);
        }
        rec.finalize();
    } catch (const certification_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCertification;
    } catch (const pmspec::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}
