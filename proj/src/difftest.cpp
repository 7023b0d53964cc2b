#include "ijdom/difftest.hpp"

#include <sstream>

#include "ijdom/domination.hpp"
#include "ijdom/errors.hpp"

namespace ijdom {

IntervalGraph graph_from_low_profile(const std::vector<int>& low) {
    std::vector<std::pair<double, double>> raw;
    raw.reserve(low.size());
    for (size_t v = 0; v < low.size(); ++v) {
        int lo = low[v];
        if (lo < 1 || lo > static_cast<int>(v) + 1)
            throw InputError("low profile entry out of range");
        raw.emplace_back(lo - 0.5, static_cast<double>(v + 1));
    }
    return from_intervals(raw);
}

std::vector<GammaKey> enumerate_keys(int n) {
    std::vector<GammaKey> keys;
    for (int i = 1; i <= n; ++i) {
        keys.push_back(GammaKey::g0_prefix(i));
        keys.push_back(GammaKey::g1_prefix(i));
        for (int j = 1; j <= i; ++j) keys.push_back(GammaKey::g0_range(j, i));
        for (int j = 1; j < i; ++j) {
            keys.push_back(GammaKey::g1_tail(j, i));
            for (int k = j; k < i; ++k) keys.push_back(GammaKey::g0_single(j, i, k));
        }
        for (int j = 1; j < i; ++j)
            for (int k = 1; k <= j; ++k) keys.push_back(GammaKey::g1_pair(k, i, j));
        for (int j = 1; j < i; ++j)
            for (int k = 1; k < j; ++k)
                for (int l = 1; l <= k; ++l) {
                    keys.push_back(GammaKey::g1_triple(l, i, j, k));
                    if (l < k) keys.push_back(GammaKey::g11_run(l, i, j, k));
                }
    }
    return keys;
}

namespace {

std::string fmt_instance(const IntervalSet& s) {
    std::ostringstream os;
    for (const auto& iv : s) os << iv.left << " " << iv.right << "\n";
    return os.str();
}

std::string fmt_oracle(const OracleResult& r) {
    return r.defined() ? std::to_string(*r.value) : std::string("undefined");
}

// Dominance claims behind the kDominated marker: the entry every
// consuming minimum also contains must be no larger.
std::optional<GammaKey> dominance_twin(const GammaKey& key) {
    switch (key.kind) {
        case GammaKind::kG1Pair: return GammaKey::g1_tail(key.a, key.b);
        case GammaKind::kG1Triple:
        case GammaKind::kG11Run: return GammaKey::g1_pair(key.a, key.b, key.c);
        default: return std::nullopt;
    }
}

}  // namespace

std::vector<Mismatch> diff_one(const IntervalSet& s, bool per_table, bool corrupt) {
    std::vector<Mismatch> out;
    std::vector<std::pair<double, double>> raw;
    raw.reserve(s.size());
    for (const auto& iv : s) raw.emplace_back(iv.left, iv.right);
    IntervalGraph g = from_intervals(raw);
    int n = g.order();

    SolverOptions opt;
    opt.corrupt_for_testing = corrupt;
    GammaSolver solver(g, opt);

    SolveResult dp = solver.solve();
    OracleResult exact = min_dom(g.graph, 2);
    if (!exact.defined() || *exact.value != dp.value) {
        Mismatch m;
        m.instance = s;
        m.detail = "root value: tables=" + std::to_string(dp.value) + " search=" + fmt_oracle(exact);
        out.push_back(m);
    }
    auto cert = is_1j_dominating(g.graph, dp.witness, 2);
    if (!cert.valid || static_cast<int>(dp.witness.size()) != dp.value) {
        Mismatch m;
        m.instance = s;
        m.detail = "witness of claimed size " + std::to_string(dp.value) + " failed validation";
        out.push_back(m);
    }

    if (!per_table) return out;
    for (const GammaKey& key : enumerate_keys(n)) {
        GammaValue tv = solver.eval(key);
        OracleResult ov = gamma_oracle(g, key);
        bool ok;
        std::string note;
        if (tv.finite()) {
            ok = ov.defined() && *ov.value == tv.value;
        } else if (tv.undefined()) {
            ok = !ov.defined();
        } else {  // dominated entry: check the inequality it stands on
            auto twin = dominance_twin(key);
            OracleResult tw = twin ? gamma_oracle(g, *twin) : OracleResult{};
            ok = !ov.defined() || (tw.defined() && *tw.value <= *ov.value);
            note = twin ? " twin " + to_string(*twin) + "=" + fmt_oracle(tw) : "";
        }
        if (!ok) {
            Mismatch m;
            m.instance = s;
            m.key = key;
            m.detail = to_string(key) + ": tables=" + to_string(tv) + " search=" + fmt_oracle(ov) +
                       note;
            out.push_back(m);
            if (out.size() >= 8) break;  // enough evidence per instance
        }
    }
    return out;
}

namespace {

// drop the last interval while the discrepancy persists
IntervalSet shrink(IntervalSet s, bool per_table, bool corrupt) {
    while (s.size() > 1) {
        IntervalSet smaller(s.begin(), s.end() - 1);
        if (diff_one(smaller, per_table, corrupt).empty()) break;
        s = std::move(smaller);
    }
    return s;
}

}  // namespace

FuzzOutcome run_fuzz(const FuzzOptions& opt) {
    FuzzOutcome out;
    SplitMix64 seeder(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
        if (opt.progress) opt.progress(t);
        GenSpec spec;
        spec.kind = opt.kind;
        spec.seed = seeder.next();
        spec.n = 1 + static_cast<int>(seeder.below(static_cast<uint64_t>(opt.max_n)));
        IntervalSet inst = spec.kind == GenKind::kUnitIntervals ? gen_unit_intervals(spec)
                                                                : gen_intervals(spec);
        auto bad = diff_one(inst, opt.per_table, opt.corrupt_for_testing);
        ++out.trials_run;

        if (bad.empty() && opt.check_unit_gamma_collapse) {
            std::vector<std::pair<double, double>> raw;
            for (const auto& iv : inst) raw.emplace_back(iv.left, iv.right);
            IntervalGraph g = from_intervals(raw);
            OracleResult plain = min_dom(g.graph, kUnboundedJ);
            OracleResult two = min_dom(g.graph, 2);
            if (!plain.defined() || !two.defined() || *plain.value != *two.value) {
                Mismatch m;
                m.instance = inst;
                m.detail = "proper instance with gamma=" + fmt_oracle(plain) +
                           " but gamma12=" + fmt_oracle(two);
                bad.push_back(m);
            }
        }

        if (!bad.empty()) {
            ++out.mismatches;
            if (out.reports.size() < 5) {
                IntervalSet small = shrink(inst, opt.per_table, opt.corrupt_for_testing);
                auto confirmed = diff_one(small, opt.per_table, opt.corrupt_for_testing);
                Mismatch m = confirmed.empty() ? bad.front() : confirmed.front();
                if (!confirmed.empty()) m.instance = small;
                m.detail += " [seed " + std::to_string(spec.seed) + ", n=" +
                            std::to_string(spec.n) + "]\n" + fmt_instance(m.instance);
                out.reports.push_back(std::move(m));
            }
        }
    }
    return out;
}

}  // namespace ijdom
