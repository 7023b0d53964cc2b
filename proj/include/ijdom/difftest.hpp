#ifndef IJDOM_DIFFTEST_HPP
#define IJDOM_DIFFTEST_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ijdom/gamma.hpp"
#include "ijdom/generators.hpp"
#include "ijdom/interval_graph.hpp"
#include "ijdom/oracle.hpp"

namespace ijdom {

/// Interval graph whose low table is exactly `low` (1 <= low[v] <= v,
/// 0-indexed input). Every vertex ordering obeying the numbering
/// property arises this way, so iterating over low profiles enumerates
/// all orderable adjacency structures of a given size.
IntervalGraph graph_from_low_profile(const std::vector<int>& low);

/// All valid public table keys for an n-vertex prefix family.
std::vector<GammaKey> enumerate_keys(int n);

struct Mismatch {
    IntervalSet instance;                 // minimized
    std::optional<GammaKey> key;          // set for per-table mismatches
    std::string detail;                   // dp vs oracle values, seed
};

struct FuzzOptions {
    int trials = 500;
    int max_n = 16;
    uint64_t seed = 1;
    GenKind kind = GenKind::kRandomIntervals;
    bool per_table = false;
    bool check_unit_gamma_collapse = false;  // unit kind: also assert gamma == gamma12
    bool corrupt_for_testing = false;        // negative control
    std::function<void(int /*trial*/)> progress;
};

struct FuzzOutcome {
    int trials_run = 0;
    int mismatches = 0;
    std::vector<Mismatch> reports;  // first few, minimized
};

/// Compares the tabulation against the exact search on one instance.
/// Global: root value + witness validity. Per-table: every key, with
/// kUndefined matching infeasible and kDominated validated through the
/// oracle-side dominance inequality. Returns all discrepancies.
std::vector<Mismatch> diff_one(const IntervalSet& s, bool per_table, bool corrupt = false);

/// Seeded campaign over generated instances; mismatched instances are
/// shrunk by repeatedly dropping the last interval while the mismatch
/// persists.
FuzzOutcome run_fuzz(const FuzzOptions& opt);

}  // namespace ijdom

#endif
