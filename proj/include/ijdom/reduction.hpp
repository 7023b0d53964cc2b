#ifndef IJDOM_REDUCTION_HPP
#define IJDOM_REDUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "ijdom/chords.hpp"
#include "ijdom/oracle.hpp"
#include "ijdom/reduction_types.hpp"

namespace ijdom {

/// Circle-graph instance produced from a 3-CNF formula: the formula is
/// satisfiable iff the chord intersection graph has a [1,2]-dominating
/// set of size at most k = 7m + 2t.
///
/// Inventory: every clause contributes 34 chords (per literal: t, f, a
/// pair, p pair; per clause: three u chords, three w chords, two guards,
/// two claw centers, six claw leaves). Every repetition link between two
/// consecutive occurrences of a variable contributes 10 chords (two
/// connection chords, each with a claw anchor s and three leaves), so the
/// total is 34m + 10t.
struct GadgetInstance {
    ChordDiagram diagram;
    long long k = 0;
    int t = 0;
    /// role label -> chord id (1-based, aligned with diagram order).
    std::map<std::string, int> labels;

    int chord_id(const std::string& label) const;
};

/// Deterministic construction from the canonical endpoint layout.
/// Throws DomainError when a clause repeats a variable.
GadgetInstance build_gadget(const CnfFormula& f);

/// 7m + 2t with t = sum over variables of max(0, occurrences - 1).
long long target_k(const CnfFormula& f);

/// Exhaustive satisfiability over <= 20 variables. Throws ResourceError
/// beyond that. An empty clause list is vacuously satisfiable.
bool sat_brute(const CnfFormula& f);

/// The explicit dominating set the construction promises for a
/// satisfying assignment: per clause one t/f chord per literal plus a
/// (u, w) pair chosen by the clause's true-literal pattern, both claw
/// centers, and every connection anchor s. Size 7m + 2t.
std::vector<int> intended_dominating_set(const GadgetInstance& inst, const CnfFormula& f,
                                         const Assignment& a);

/// Reads an assignment back from a dominating set of size <= k: a
/// literal is true iff its t chord is in d, false iff its f chord is.
/// Throws DomainError when d contains both or neither of a literal's
/// t/f chords, when occurrences of one variable disagree, or when d is
/// larger than k.
Assignment decode_assignment(const GadgetInstance& inst, const CnfFormula& f,
                             const std::vector<int>& d);

struct ReductionReport {
    bool satisfiable = false;
    long long k = 0;
    int chord_count = 0;
    bool dominating_at_k = false;       // some [1,2]-dominating set of size <= k exists
    std::optional<int> minimum;         // set when the search found one
    bool agree = false;                 // satisfiable == dominating_at_k
    bool decoded_ok = false;            // decoded assignment satisfies the formula
    std::vector<int> witness;
};

/// Desk-scale check of the reduction biconditional: SAT by enumeration
/// vs bounded exact [1,2]-domination search on the gadget, plus decoding.
/// Throws ResourceError when the gadget exceeds `cap` chords.
ReductionReport verify_reduction_small(const CnfFormula& f, int cap = 40);

/// Structural check of the committed crossing contract on the derived
/// intersection graph (p pairs exact, u/w versus a pairs, guards, claws,
/// connection anchors). Returns an empty list when everything holds.
std::vector<std::string> check_gadget_contract(const GadgetInstance& inst, const CnfFormula& f);

}  // namespace ijdom

#endif
