#ifndef IJDOM_GAMMA_HPP
#define IJDOM_GAMMA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ijdom/interval_graph.hpp"
#include "ijdom/oracle.hpp"

namespace ijdom {

/// Value of one table entry.
///
/// kUndefined: the subproblem is infeasible (the tables' "not defined"
/// outcome, absorbing under +1 and skipped by minima).
///
/// kDominated: the entry was cut off because another entry that appears
/// in every minimum alongside it is never larger (the two-member table
/// when every neighbor of the second member is also a neighbor of the
/// top member). Consumers treat it like kUndefined; differential tests
/// check the dominance claim instead of the value.
enum class ValueState : uint8_t { kFinite = 0, kUndefined = 1, kDominated = 2 };

struct GammaValue {
    ValueState state = ValueState::kUndefined;
    int value = 0;

    bool finite() const { return state == ValueState::kFinite; }
    bool undefined() const { return state == ValueState::kUndefined; }
    bool dominated() const { return state == ValueState::kDominated; }

    static GammaValue finite_of(int v) { return {ValueState::kFinite, v}; }
    static GammaValue undef() { return {ValueState::kUndefined, 0}; }
    static GammaValue dom() { return {ValueState::kDominated, 0}; }

    bool operator==(const GammaValue& o) const = default;
};

std::string to_string(const GammaValue& v);

struct SolveStats {
    size_t memo_entries = 0;
    size_t memo_slots = 0;
    size_t memo_bytes = 0;
    uint64_t evals = 0;
};

struct SolveResult {
    int value = 0;
    std::vector<int> witness;
    SolveStats stats;
};

struct SolverOptions {
    /// Hard limit on memoized entries; exceeding it raises ResourceError.
    size_t memo_cap_entries = 40'000'000;
    /// Test hook: deliberately mis-evaluates one recurrence branch so the
    /// differential harness has a guaranteed-broken implementation to catch.
    bool corrupt_for_testing = false;
};

/// Memoized evaluator for the eight mutually recursive tables and the
/// driver min over the two root entries.
///
/// One solver owns one memo and is confined to a single thread; distinct
/// solvers on distinct graphs may run concurrently.
class GammaSolver {
  public:
    explicit GammaSolver(const IntervalGraph& g, SolverOptions opt = {});
    ~GammaSolver();

    GammaSolver(const GammaSolver&) = delete;
    GammaSolver& operator=(const GammaSolver&) = delete;

    /// Value of one public table entry. Throws InputError on a malformed key.
    GammaValue eval(const GammaKey& key);

    /// min over the two root entries, with a witness replayed from the
    /// recorded argmin choices. The witness is re-validated before return.
    SolveResult solve();

    const NeighborhoodIndex& index() const;
    SolveStats stats() const;

  private:
    struct Impl;
    Impl* impl_;
};

/// Convenience wrapper: value and witness of a minimum [1,2]-dominating
/// set of g.
SolveResult solve_gamma12(const IntervalGraph& g, SolverOptions opt = {});

}  // namespace ijdom

#endif
