// mcx: matching-complex toolkit.
//
// Subcommands:
//   gen        write a generated graph in edge-list format
//   check      decide a property of the matching complex of a graph
//   betti      reduced Betti numbers of the matching complex
//   reproduce  re-run a named verification suite, one pass/fail line per claim
//
// Exit codes: 0 evaluated, 2 invalid input, 3 indeterminate result.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mcx/classify.hpp"
#include "mcx/complex.hpp"
#include "mcx/decide.hpp"
#include "mcx/enumerate.hpp"
#include "mcx/graph_io.hpp"
#include "mcx/report.hpp"
#include "mcx/repro.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitIndeterminate = 3;

std::string read_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

mcx::Graph load_graph(const std::string& path, const std::string& format) {
    std::string text;
    if (path.empty() || path == "-") {
        text = read_stream(std::cin);
    } else {
        std::ifstream file(path);
        if (!file) throw mcx::invalid_input("cannot open input file '" + path + "'");
        text = read_stream(file);
    }
    if (format == "graph6") {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            return mcx::parse_graph6(line.substr(pos));
        }
        throw mcx::invalid_input("graph6: no data line found");
    }
    return mcx::parse_graph_file(text);
}

std::string normalize_family(std::string name) {
    for (char& c : name)
        if (c == '_') c = '-';
    return name;
}

mcx::Graph generate_family(const std::string& family, const std::vector<std::uint32_t>& params,
                           const std::string& base_spec) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw mcx::invalid_input("gen " + family + ": expected " + std::to_string(k) +
                                     " parameter(s)");
    };
    if (auto g = mcx::builtin_graph(family)) {
        need(0);
        return *g;
    }
    if (family == "complete") {
        need(1);
        return mcx::complete_graph(params[0]);
    }
    if (family == "complete-bipartite") {
        need(2);
        return mcx::complete_bipartite(params[0], params[1]);
    }
    if (family == "cycle") {
        need(1);
        return mcx::cycle_graph(params[0]);
    }
    if (family == "path") {
        need(1);
        return mcx::path_graph(params[0]);
    }
    if (family == "star") {
        need(1);
        return mcx::star_graph(params[0]);
    }
    if (family == "star-triangle") {
        need(1);
        return mcx::star_triangle(params[0]);
    }
    if (family == "cameron-walker") {
        // params: |X| |Y| leaf multiplicities (one per X vertex) then triangle
        // multiplicities (one per Y vertex); --base overrides the complete
        // bipartite base with an edge list "u-v,u-v" on X = 0..|X|-1,
        // Y = |X|..|X|+|Y|-1.
        if (params.size() < 2) throw mcx::invalid_input("gen cameron-walker: need |X| |Y| ...");
        std::uint32_t nx = params[0], ny = params[1];
        need(2 + nx + ny);
        mcx::CWParams cw;
        if (base_spec.empty()) {
            cw.base = mcx::complete_bipartite(nx, ny);
        } else {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
            std::istringstream in(base_spec);
            std::string tok;
            while (std::getline(in, tok, ',')) {
                std::size_t dash = tok.find('-');
                if (dash == std::string::npos)
                    throw mcx::invalid_input("gen cameron-walker: base edges look like 'u-v,u-v'");
                edges.emplace_back(static_cast<std::uint32_t>(std::stoul(tok.substr(0, dash))),
                                   static_cast<std::uint32_t>(std::stoul(tok.substr(dash + 1))));
            }
            cw.base = mcx::make_graph(nx + ny, edges);
        }
        for (std::uint32_t i = 0; i < nx; ++i) {
            cw.part_x.push_back(i);
            cw.leaf_mult[i] = params[2 + i];
        }
        for (std::uint32_t j = 0; j < ny; ++j) cw.triangle_mult[nx + j] = params[2 + nx + j];
        return mcx::cameron_walker_graph(cw);
    }
    throw mcx::invalid_input("unknown family '" + family + "'");
}

void emit(const mcx::Json& report) { std::cout << report.dump(2) << '\n'; }

int run_check(const std::string& predicate, const mcx::Graph& g, const mcx::FieldSpec& field,
              std::uint64_t budget) {
    using namespace mcx;
    auto t0 = std::chrono::steady_clock::now();
    SimplicialComplex cx = matching_complex(g);
    Json report = make_report(g, cx);
    int exit_code = kExitOk;

    if (predicate == "pure") {
        report["checks"]["pure"] = is_pure(cx);
    } else if (predicate == "sc") {
        std::string why;
        bool sc = is_strongly_connected(cx, &why);
        report["checks"]["strongly_connected"] = sc;
        if (!why.empty()) report["checks"]["diagnostic"] = why;
    } else if (predicate == "cm") {
        DecisionCache cache;
        report["field"] = field.to_string();
        report["checks"]["cm"] = is_cohen_macaulay(cx, field, &cache);
    } else if (predicate == "gorenstein") {
        DecisionCache cache;
        report["field"] = field.to_string();
        report["checks"]["gorenstein"] = is_gorenstein(cx, field, &cache);
    } else if (predicate == "vd") {
        DecisionCache cache;
        VdResult vd = is_vertex_decomposable(cx, &cache, budget);
        if (vd.value == Tri::Indeterminate) {
            report["checks"]["vd"] = "indeterminate";
            exit_code = kExitIndeterminate;
        } else {
            report["checks"]["vd"] = vd.value == Tri::True;
            if (vd.value == Tri::True) report["witness"] = witness_json(vd.shedding_order);
        }
    } else if (predicate == "shellable") {
        ShellResult sh = is_shellable(cx, budget);
        if (sh.value == Tri::Indeterminate) {
            report["checks"]["shellable"] = "indeterminate";
            exit_code = kExitIndeterminate;
        } else {
            report["checks"]["shellable"] = sh.value == Tri::True;
            if (sh.value == Tri::True) report["witness"] = witness_json(sh.order);
        }
        if (!sh.note.empty()) report["checks"]["diagnostic"] = sh.note;
    } else if (predicate == "classify") {
        report["checks"] = classification_json(classify_graph(g));
    } else {
        throw invalid_input("unknown predicate '" + predicate + "'");
    }

    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    attach_timing(report, ms);
    emit(report);
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    // MCX_THREADS is accepted and validated; every decision procedure is
    // deterministic and the current evaluation paths are single-threaded, so
    // any positive value behaves like 1.
    if (const char* threads = std::getenv("MCX_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(threads, &end, 10);
        if (end == threads || *end != '\0' || v < 1) {
            std::cerr << "error: MCX_THREADS must be a positive integer\n";
            return kExitInvalidInput;
        }
    }

    CLI::App app{"matching-complex toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph and print it in edge-list format");
    std::string family;
    std::vector<std::uint32_t> params;
    std::string out_path, base_spec;
    gen->add_option("family", family, "family or builtin name")->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("-o,--output", out_path, "output file (default stdout)");
    gen->add_option("--base", base_spec, "cameron-walker base edges, e.g. '0-2,0-3,1-2'");

    // check
    auto* check = app.add_subcommand("check", "decide a property of the matching complex");
    std::string predicate, in_path, field_str = "q", format = "edge-list";
    std::uint64_t budget = mcx::kUnlimitedBudget;
    check->add_option("predicate", predicate, "pure|sc|cm|vd|shellable|gorenstein|classify")
        ->required();
    check->add_option("input", in_path, "input graph file (default stdin)");
    check->add_option("--field", field_str, "coefficient field: q or gf:p");
    check->add_option("--budget", budget, "node budget for vd/shellable searches");
    check->add_option("--format", format, "edge-list or graph6")
        ->check(CLI::IsMember({"edge-list", "graph6"}));

    // betti
    auto* betti = app.add_subcommand("betti", "reduced Betti numbers of the matching complex");
    std::string b_in_path, b_field_str = "q", b_format = "edge-list";
    betti->add_option("input", b_in_path, "input graph file (default stdin)");
    betti->add_option("--field", b_field_str, "coefficient field: q or gf:p");
    betti->add_option("--format", b_format, "edge-list or graph6")
        ->check(CLI::IsMember({"edge-list", "graph6"}));

    // reproduce
    auto* repro = app.add_subcommand("reproduce", "re-run a named verification suite");
    std::string suite;
    repro->add_option("suite", suite, "gorenstein_small|girth5|kn|kmn|k7_primes|euler_sign")
        ->required();

    // search: scans behind the open classification questions
    auto* search = app.add_subcommand("search", "threshold and characteristic scans");
    auto* am = search->add_subcommand(
        "am", "smallest n > m with M(K_{m,n}) passing a criterion");
    std::uint32_t am_m = 0, am_nmax = 0;
    std::string am_criterion, am_field = "q";
    std::uint64_t am_budget = mcx::kUnlimitedBudget;
    am->add_option("m", am_m, "smaller part size")->required();
    am->add_option("criterion", am_criterion, "vd|shellable|cm")->required();
    am->add_option("n_max", am_nmax, "scan bound")->required();
    am->add_option("--field", am_field, "field for the cm criterion");
    am->add_option("--budget", am_budget, "node budget for vd/shellable");
    auto* primes = search->add_subcommand(
        "kn-primes", "characteristics p <= p_max with M(K_n) Cohen-Macaulay over GF(p)");
    std::uint32_t kn_n = 0, kn_pmax = 0;
    primes->add_option("n", kn_n, "complete graph order")->required();
    primes->add_option("p_max", kn_pmax, "prime bound")->required();
    search->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            mcx::Graph g = generate_family(normalize_family(family), params, base_spec);
            std::string text = mcx::serialize_graph_file(g);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                if (!out) throw mcx::invalid_input("cannot open output file '" + out_path + "'");
                out << text;
            }
            return kExitOk;
        }
        if (check->parsed()) {
            mcx::Graph g = load_graph(in_path, format);
            return run_check(predicate, g, mcx::FieldSpec::parse(field_str), budget);
        }
        if (betti->parsed()) {
            auto t0 = std::chrono::steady_clock::now();
            mcx::Graph g = load_graph(b_in_path, b_format);
            mcx::FieldSpec field = mcx::FieldSpec::parse(b_field_str);
            mcx::SimplicialComplex cx = mcx::matching_complex(g);
            mcx::Json report = mcx::make_report(g, cx);
            report["checks"] = mcx::betti_json(mcx::reduced_betti(cx, field));
            double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
            mcx::attach_timing(report, ms);
            emit(report);
            return kExitOk;
        }
        if (repro->parsed()) {
            mcx::DecisionCache cache;
            bool all_ok = true;
            for (int k : mcx::suite_criteria(suite)) {
                mcx::SuiteResult result = mcx::run_criterion(k, cache);
                for (const mcx::Claim& c : result.claims) {
                    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
                    if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
                    std::cout << '\n';
                    all_ok = all_ok && c.pass;
                }
            }
            return all_ok ? kExitOk : 1;
        }
        if (am->parsed()) {
            auto t0 = std::chrono::steady_clock::now();
            mcx::AmCriterion criterion = mcx::AmCriterion::vd();
            if (am_criterion == "vd")
                criterion = mcx::AmCriterion::vd();
            else if (am_criterion == "shellable")
                criterion = mcx::AmCriterion::shellable();
            else if (am_criterion == "cm")
                criterion = mcx::AmCriterion::cm(mcx::FieldSpec::parse(am_field));
            else
                throw mcx::invalid_input("search am: criterion must be vd, shellable or cm");
            mcx::DecisionCache cache;
            mcx::AmSearchResult r = mcx::a_m_search(am_m, criterion, am_nmax, &cache, am_budget);
            mcx::Json report;
            report["search"] = "am";
            report["m"] = am_m;
            report["criterion"] = am_criterion;
            if (am_criterion == "cm") report["field"] = mcx::FieldSpec::parse(am_field).to_string();
            report["n_max"] = am_nmax;
            report["found"] = r.found ? mcx::Json(*r.found) : mcx::Json(nullptr);
            report["indeterminate"] = r.indeterminate;
            mcx::attach_timing(report, std::chrono::duration<double, std::milli>(
                                           std::chrono::steady_clock::now() - t0)
                                           .count());
            emit(report);
            return r.indeterminate ? kExitIndeterminate : kExitOk;
        }
        if (primes->parsed()) {
            auto t0 = std::chrono::steady_clock::now();
            if (kn_n < 2) throw mcx::invalid_input("search kn-primes: n >= 2 required");
            mcx::DecisionCache cache;
            mcx::SimplicialComplex cx = mcx::matching_complex(mcx::complete_graph(kn_n));
            mcx::Json per_prime = mcx::Json::object();
            mcx::Json cm_primes = mcx::Json::array();
            for (std::uint32_t p = 2; p <= kn_pmax; ++p) {
                if (!mcx::is_prime_u32(p)) continue;
                bool cm = mcx::is_cohen_macaulay(cx, mcx::FieldSpec::gf(p), &cache);
                per_prime[std::to_string(p)] = cm;
                if (cm) cm_primes.push_back(p);
            }
            mcx::Json report;
            report["search"] = "kn-primes";
            report["n"] = kn_n;
            report["p_max"] = kn_pmax;
            report["cm_over_q"] = mcx::is_cohen_macaulay(cx, mcx::FieldSpec::rationals(), &cache);
            report["cm"] = per_prime;
            report["cm_primes"] = cm_primes;
            mcx::attach_timing(report, std::chrono::duration<double, std::milli>(
                                           std::chrono::steady_clock::now() - t0)
                                           .count());
            emit(report);
            return kExitOk;
        }
    } catch (const mcx::invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
