#include "ijdom/generators.hpp"

#include "ijdom/errors.hpp"

namespace ijdom {

namespace {

// Distinct stream per (kind, n, seed) so changing one parameter never
// replays another generator's draws.
uint64_t stream_seed(const GenSpec& spec, uint64_t salt) {
    SplitMix64 rng(spec.seed ^ salt);
    rng.next();
    return rng.next() ^ (static_cast<uint64_t>(spec.n) << 32) ^ static_cast<uint64_t>(spec.clauses);
}

}  // namespace

IntervalSet gen_intervals(const GenSpec& spec) {
    if (spec.n < 1) throw InputError("need at least one interval");
    SplitMix64 rng(stream_seed(spec, 0x1df0cb01u));
    std::vector<std::pair<double, double>> raw;
    raw.reserve(static_cast<size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i) {
        // tenth-grid coordinates: ties in right endpoints occur routinely
        int left10 = static_cast<int>(rng.below(1000));
        int len10 = 1 + static_cast<int>(rng.below(300));
        raw.emplace_back(left10 / 10.0, (left10 + len10) / 10.0);
    }
    return *from_intervals(raw).source;
}

IntervalSet gen_unit_intervals(const GenSpec& spec) {
    if (spec.n < 1) throw InputError("need at least one interval");
    SplitMix64 rng(stream_seed(spec, 0x75bcd15u));
    std::vector<std::pair<double, double>> raw;
    raw.reserve(static_cast<size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i) {
        int left10 = static_cast<int>(rng.below(static_cast<uint64_t>(spec.n) * 10));
        raw.emplace_back(left10 / 10.0, left10 / 10.0 + 1.0);
    }
    return *from_intervals(raw).source;
}

CnfFormula gen_3sat(const GenSpec& spec) {
    if (spec.n < 3) throw InputError("random 3-SAT needs at least 3 variables");
    if (spec.clauses < 0) throw InputError("clause count must be nonnegative");
    SplitMix64 rng(stream_seed(spec, 0x9e3779b9u));
    CnfFormula f;
    f.num_vars = spec.n;
    for (int c = 0; c < spec.clauses; ++c) {
        Clause cl;
        for (int slot = 0; slot < 3; ++slot) {
            int v;
            bool dup;
            do {
                v = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(spec.n)));
                dup = false;
                for (int s = 0; s < slot; ++s)
                    if (std::abs(cl.lits[static_cast<size_t>(s)]) == v) dup = true;
            } while (dup);
            cl.lits[static_cast<size_t>(slot)] = rng.below(2) ? v : -v;
        }
        f.clauses.push_back(cl);
    }
    return f;
}

}  // namespace ijdom
