#ifndef IJDOM_DOMINATION_HPP
#define IJDOM_DOMINATION_HPP

#include <limits>
#include <vector>

#include "ijdom/graph.hpp"

namespace ijdom {

/// Multiplicity bound "unbounded": plain domination.
inline constexpr int kUnboundedJ = std::numeric_limits<int>::max();

/// Verdict of a [1,j]-domination check, with every violating vertex and
/// its neighbor count in the checked set.
struct DominationCertificate {
    std::vector<int> vertices;  // the checked set, sorted
    int j = kUnboundedJ;
    bool valid = false;
    std::vector<std::pair<int, int>> violations;  // (vertex, count in set)
};

/// Checks that every vertex outside `s` has between 1 and j neighbors in
/// `s`. Throws InputError on out-of-range ids.
DominationCertificate is_1j_dominating(const Graph& g, const std::vector<int>& s, int j);

}  // namespace ijdom

#endif
