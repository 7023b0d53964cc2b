#ifndef IJDOM_ORACLE_HPP
#define IJDOM_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ijdom/domination.hpp"
#include "ijdom/graph.hpp"
#include "ijdom/interval_graph.hpp"

namespace ijdom {

/// Vertices forced into / kept out of the dominating set.
struct MembershipConstraint {
    std::vector<int> must_include;
    std::vector<int> must_exclude;

    bool empty() const { return must_include.empty() && must_exclude.empty(); }
};

/// Result of an exact search. value == nullopt means no feasible set
/// exists under the constraint (the infeasible subproblem sentinel).
/// exceeds_budget marks a bounded search that proved "no set of size
/// <= budget" without deciding feasibility beyond it.
struct OracleResult {
    std::optional<int> value;
    std::optional<std::vector<int>> witness;
    bool exceeds_budget = false;

    bool defined() const { return value.has_value(); }
};

/// Search guards. Searches are exact; the caps only bound instance size.
/// Masks limit instances to 64 vertices regardless of the caps.
struct OracleLimits {
    int unconstrained_cap = 25;
    int constrained_cap = 40;
};

/// Exact minimum [1,j]-dominating set of g subject to c, by iterative
/// deepening on cardinality with branch-and-bound. Throws ResourceError
/// above the cap; infeasibility is a value, not an error.
OracleResult min_dom(const Graph& g, int j, const MembershipConstraint& c = {},
                     const OracleLimits& limits = {});

/// As min_dom but stops at `budget`: returns the minimum if it is
/// <= budget, else an exceeds-budget result.
OracleResult min_dom_bounded(const Graph& g, int j, int budget,
                             const MembershipConstraint& c = {}, const OracleLimits& limits = {});

enum class GammaKind : uint8_t {
    kG0Prefix,   // (i)          no member,  i excluded
    kG0Range,    // (j, i)       all of [j, i] excluded
    kG0Single,   // (j, i, k)    k in D, [j, i] \ {k} excluded
    kG1Prefix,   // (i)          i in D
    kG1Tail,     // (j, i)       i in D, [j, i) excluded
    kG1Pair,     // (k, i, j)    i, j in D, [k, i) \ {j} excluded
    kG1Triple,   // (l, i, j, k) i, j, k in D, [l, i) \ {j, k} excluded
    kG11Run,     // (l, i, j, k) i, j in D, [l, k] in D, (k, i) \ {j} excluded
    kGammaFull,  // (i)          unconstrained on the prefix [1, i]
};

/// Identity of one tabulated subproblem on the prefix graph G[1, i].
/// Argument order follows the table definitions; unused slots are 0.
struct GammaKey {
    GammaKind kind = GammaKind::kGammaFull;
    int a = 0, b = 0, c = 0, d = 0;

    static GammaKey g0_prefix(int i) { return {GammaKind::kG0Prefix, i, 0, 0, 0}; }
    static GammaKey g0_range(int j, int i) { return {GammaKind::kG0Range, j, i, 0, 0}; }
    static GammaKey g0_single(int j, int i, int k) { return {GammaKind::kG0Single, j, i, k, 0}; }
    static GammaKey g1_prefix(int i) { return {GammaKind::kG1Prefix, i, 0, 0, 0}; }
    static GammaKey g1_tail(int j, int i) { return {GammaKind::kG1Tail, j, i, 0, 0}; }
    static GammaKey g1_pair(int k, int i, int j) { return {GammaKind::kG1Pair, k, i, j, 0}; }
    static GammaKey g1_triple(int l, int i, int j, int k) {
        return {GammaKind::kG1Triple, l, i, j, k};
    }
    static GammaKey g11_run(int l, int i, int j, int k) { return {GammaKind::kG11Run, l, i, j, k}; }
    static GammaKey gamma_full(int i) { return {GammaKind::kGammaFull, i, 0, 0, 0}; }

    /// Prefix length i of the subproblem.
    int prefix() const;

    bool operator==(const GammaKey& o) const = default;
};

/// Range checks per the table definitions. Throws InputError when violated.
void validate_key(const GammaKey& key, int n);

/// Membership constraint realizing the key's side conditions.
MembershipConstraint key_constraint(const GammaKey& key);

/// Ground truth for one table entry: translates the key into (prefix
/// graph, j = 2, constraint) and delegates to min_dom.
OracleResult gamma_oracle(const IntervalGraph& g, const GammaKey& key,
                          const OracleLimits& limits = {});

std::string to_string(const GammaKey& key);

}  // namespace ijdom

#endif
