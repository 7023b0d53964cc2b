#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ijdom/difftest.hpp"
#include "ijdom/domination.hpp"
#include "ijdom/errors.hpp"
#include "ijdom/gamma.hpp"
#include "ijdom/generators.hpp"
#include "ijdom/io.hpp"
#include "ijdom/oracle.hpp"
#include "ijdom/reduction.hpp"
#include "ijdom/report.hpp"

namespace {

using namespace ijdom;

// exit codes: 0 ok, 1 property violation, 2 parse, 3 structure,
// 4 resource, 5 domain assumption
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitStructure = 3;
constexpr int kExitResource = 4;
constexpr int kExitDomain = 5;

struct Common {
    bool json = false;
};

void emit(const RunReport& rep, const Common& c) {
    std::cout << (c.json ? rep.json() : rep.text());
}

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

IntervalGraph load_graph(const std::string& path, const std::string& format) {
    if (format == "intervals") return from_intervals(read_intervals_file(path));
    if (format == "edges") {
        Graph g = read_edge_list_file(path);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v <= g.order(); ++v)
            for (int u : g.neighbors(v))
                if (u < v) edges.emplace_back(u, v);
        return from_ordered_edges(g.order(), edges);
    }
    throw InputError("unknown format `" + format + "` (expected intervals|edges)");
}

std::string join(const std::vector<int>& xs) {
    std::ostringstream ss;
    for (size_t i = 0; i < xs.size(); ++i) ss << (i ? " " : "") << xs[i];
    return ss.str();
}

int cmd_solve(const std::string& path, const std::string& format, bool witness, const Common& c) {
    double t0 = now_ms();
    IntervalGraph g = load_graph(path, format);
    GammaSolver solver(g);
    SolveResult res = solver.solve();
    RunReport rep;
    rep.add("command", "solve");
    rep.add("input", path);
    rep.add("digest", file_digest(path));
    rep.add("n", g.order());
    rep.add("gamma12", res.value);
    if (witness) rep.add("witness", join(res.witness));
    rep.add("memo_entries", static_cast<long long>(res.stats.memo_entries));
    rep.add("time_ms", now_ms() - t0);
    emit(rep, c);
    return 0;
}

int cmd_oracle(const std::string& path, const std::string& format, int j,
               const std::vector<int>& include, const std::vector<int>& exclude, int budget,
               int cap, const Common& c) {
    double t0 = now_ms();
    Graph g;
    if (format == "chords")
        g = chords_to_graph(read_chords_file(path));
    else
        g = load_graph(path, format).graph;
    MembershipConstraint mc{include, exclude};
    OracleLimits lim;
    if (cap > 0) lim.unconstrained_cap = lim.constrained_cap = cap;
    OracleResult res = budget >= 0 ? min_dom_bounded(g, j, budget, mc, lim)
                                   : min_dom(g, j, mc, lim);
    RunReport rep;
    rep.add("command", "oracle");
    rep.add("input", path);
    rep.add("digest", file_digest(path));
    rep.add("n", g.order());
    rep.add("j", j == kUnboundedJ ? std::string("unbounded") : std::to_string(j));
    if (res.defined()) {
        rep.add("value", *res.value);
        rep.add("witness", join(*res.witness));
    } else {
        rep.add("value", res.exceeds_budget ? std::string("exceeds-budget")
                                            : std::string("undefined"));
    }
    rep.add("time_ms", now_ms() - t0);
    emit(rep, c);
    return 0;
}

int cmd_fuzz(const FuzzOptions& opt, const Common& c) {
    double t0 = now_ms();
    FuzzOutcome out = run_fuzz(opt);
    RunReport rep;
    rep.add("command", "fuzz");
    rep.add("trials", out.trials_run);
    rep.add("max_n", opt.max_n);
    rep.add("seed", static_cast<long long>(opt.seed));
    rep.add("per_table", opt.per_table);
    rep.add("mismatches", out.mismatches);
    for (size_t i = 0; i < out.reports.size(); ++i)
        rep.add("counterexample_" + std::to_string(i + 1), out.reports[i].detail);
    rep.add("time_ms", now_ms() - t0);
    emit(rep, c);
    return out.mismatches == 0 ? 0 : kExitMismatch;
}

int cmd_reduce(const std::string& cnf, const std::string& out_path, const Common& c) {
    CnfFormula f = read_dimacs_cnf_file(cnf);
    GadgetInstance inst = build_gadget(f);
    {
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot write " + out_path);
        write_chords(out, inst.diagram,
                     {"k = " + std::to_string(inst.k), "t = " + std::to_string(inst.t)});
    }
    {
        std::ofstream out(out_path + ".labels");
        if (!out) throw InputError("cannot write " + out_path + ".labels");
        write_label_map(out, inst);
    }
    RunReport rep;
    rep.add("command", "reduce");
    rep.add("input", cnf);
    rep.add("digest", file_digest(cnf));
    rep.add("k", inst.k);
    rep.add("chords", inst.diagram.size());
    rep.add("out", out_path);
    emit(rep, c);
    return 0;
}

int cmd_verify_reduction(const std::string& cnf, int cap, const Common& c) {
    double t0 = now_ms();
    CnfFormula f = read_dimacs_cnf_file(cnf);
    ReductionReport r = verify_reduction_small(f, cap);
    RunReport rep;
    rep.add("command", "verify-reduction");
    rep.add("input", cnf);
    rep.add("digest", file_digest(cnf));
    rep.add("k", r.k);
    rep.add("chords", r.chord_count);
    rep.add("satisfiable", r.satisfiable);
    rep.add("dominating_at_k", r.dominating_at_k);
    if (r.minimum) rep.add("minimum", *r.minimum);
    rep.add("agree", r.agree);
    if (r.dominating_at_k) rep.add("decoded_satisfies", r.decoded_ok);
    rep.add("time_ms", now_ms() - t0);
    emit(rep, c);
    return 0;
}

int cmd_bench(const std::vector<int>& sizes, uint64_t seed, int reps, const Common& c) {
    for (size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1]) throw InputError("bench sizes must be ascending");
    RunReport rep;
    rep.add("command", "bench");
    rep.add("seed", static_cast<long long>(seed));
    std::vector<double> lx, ly;
    for (int n : sizes) {
        GenSpec spec;
        spec.kind = GenKind::kRandomIntervals;
        spec.n = n;
        spec.seed = seed;
        IntervalSet s = gen_intervals(spec);
        std::vector<std::pair<double, double>> raw;
        for (const auto& iv : s) raw.emplace_back(iv.left, iv.right);
        IntervalGraph g = from_intervals(raw);
        std::vector<double> times;
        size_t memo = 0;
        int value = -1;
        for (int r = 0; r < reps; ++r) {
            double t0 = now_ms();
            SolveResult res = solve_gamma12(g);
            times.push_back(now_ms() - t0);
            memo = res.stats.memo_entries;
            value = res.value;
        }
        std::sort(times.begin(), times.end());
        double med = times[times.size() / 2];
        rep.add("n_" + std::to_string(n) + "_median_ms", med);
        rep.add("n_" + std::to_string(n) + "_gamma12", value);
        rep.add("n_" + std::to_string(n) + "_memo_entries", static_cast<long long>(memo));
        lx.push_back(std::log(static_cast<double>(n)));
        ly.push_back(std::log(std::max(med, 1e-3)));
    }
    if (sizes.size() >= 2) {
        double mx = 0, my = 0;
        for (size_t i = 0; i < lx.size(); ++i) {
            mx += lx[i];
            my += ly[i];
        }
        mx /= static_cast<double>(lx.size());
        my /= static_cast<double>(ly.size());
        double num = 0, den = 0;
        for (size_t i = 0; i < lx.size(); ++i) {
            num += (lx[i] - mx) * (ly[i] - my);
            den += (lx[i] - mx) * (lx[i] - mx);
        }
        rep.add("loglog_slope", num / den);
    }
    emit(rep, c);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers and reductions for [1,2]-domination on interval and circle graphs"};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--json", common.json, "emit the report as a single JSON document");

    auto* solve = app.add_subcommand("solve", "minimum [1,2]-dominating set of an interval graph");
    std::string in_path, format = "intervals";
    bool witness = false;
    solve->add_option("input", in_path)->required();
    solve->add_option("--format", format, "intervals|edges");
    solve->add_flag("--witness", witness, "include an optimal set in the report");

    auto* oracle = app.add_subcommand("oracle", "exact search, any graph, constraints allowed");
    std::string o_path, o_format = "intervals", o_j = "2";
    std::vector<int> inc, exc;
    int budget = -1, cap = 0;
    oracle->add_option("input", o_path)->required();
    oracle->add_option("--format", o_format, "intervals|edges|chords");
    oracle->add_option("--j", o_j, "multiplicity bound, or `inf`");
    oracle->add_option("--include", inc, "vertices forced into the set");
    oracle->add_option("--exclude", exc, "vertices kept out of the set");
    oracle->add_option("--budget", budget, "stop once this cardinality is exceeded");
    oracle->add_option("--cap", cap, "override the instance-size cap");

    auto* fuzz = app.add_subcommand("fuzz", "differential campaign: tables vs exact search");
    FuzzOptions fo;
    std::string kind = "random";
    fuzz->add_option("--trials", fo.trials);
    fuzz->add_option("--max-n", fo.max_n);
    fuzz->add_option("--seed", fo.seed);
    fuzz->add_option("--kind", kind, "random|unit");
    fuzz->add_flag("--per-table", fo.per_table, "check every table entry, not just the root");
    fuzz->add_flag("--corrupt", fo.corrupt_for_testing)
        ->description("negative control: corrupt one recurrence branch")
        ->group("");

    auto* reduce = app.add_subcommand("reduce", "3-CNF to circle-graph gadget");
    std::string cnf_path, out_path = "gadget.chords";
    reduce->add_option("--cnf", cnf_path)->required();
    reduce->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify-reduction", "desk-scale reduction check");
    std::string vcnf;
    int vcap = 40;
    verify->add_option("--cnf", vcnf)->required();
    verify->add_option("--cap", vcap, "chord cap for the exact search");

    auto* bench = app.add_subcommand("bench", "solver scaling measurement");
    std::vector<int> sizes;
    uint64_t bseed = 1;
    int reps = 5;
    bench->add_option("--sizes", sizes)->required()->delimiter(',');
    bench->add_option("--seed", bseed);
    bench->add_option("--reps", reps);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) return cmd_solve(in_path, format, witness, common);
        if (*oracle) {
            int j = o_j == "inf" || o_j == "unbounded" ? ijdom::kUnboundedJ : std::stoi(o_j);
            return cmd_oracle(o_path, o_format, j, inc, exc, budget, cap, common);
        }
        if (*fuzz) {
            fo.kind = kind == "unit" ? ijdom::GenKind::kUnitIntervals
                                     : ijdom::GenKind::kRandomIntervals;
            fo.check_unit_gamma_collapse = kind == "unit";
            return cmd_fuzz(fo, common);
        }
        if (*reduce) return cmd_reduce(cnf_path, out_path, common);
        if (*verify) return cmd_verify_reduction(vcnf, vcap, common);
        if (*bench) return cmd_bench(sizes, bseed, reps, common);
    } catch (const ijdom::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ijdom::StructureError& e) {
        std::cerr << "structure error: " << e.what() << "\n";
        return kExitStructure;
    } catch (const ijdom::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const ijdom::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
