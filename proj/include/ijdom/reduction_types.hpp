#ifndef IJDOM_REDUCTION_TYPES_HPP
#define IJDOM_REDUCTION_TYPES_HPP

#include <array>
#include <map>
#include <vector>

namespace ijdom {

/// One 3-CNF clause. Literals are nonzero ints: +v / -v.
struct Clause {
    std::array<int, 3> lits{};
};

/// CNF formula with exactly three literals per clause. The reduction
/// additionally assumes the three variables of a clause are distinct.
struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;
};

/// Total truth assignment over variables 1..num_vars.
struct Assignment {
    std::map<int, bool> values;

    bool satisfies(const CnfFormula& f) const {
        for (const auto& cl : f.clauses) {
            bool sat = false;
            for (int lit : cl.lits) {
                auto it = values.find(lit > 0 ? lit : -lit);
                bool v = it != values.end() && it->second;
                if (lit < 0) v = !v;
                if (v) {
                    sat = true;
                    break;
                }
            }
            if (!sat) return false;
        }
        return true;
    }
};

}  // namespace ijdom

#endif
