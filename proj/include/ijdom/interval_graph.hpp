#ifndef IJDOM_INTERVAL_GRAPH_HPP
#define IJDOM_INTERVAL_GRAPH_HPP

#include <optional>
#include <vector>

#include "ijdom/graph.hpp"

namespace ijdom {

/// Closed interval on the real line. Touching endpoints count as
/// intersecting.
struct Interval {
    int id = 0;  // 1-based vertex id after renumbering
    double left = 0.0;
    double right = 0.0;
};

using IntervalSet = std::vector<Interval>;

/// Interval graph with the right-endpoint vertex numbering.
///
/// The numbering satisfies: for i < j < k, {i,k} in E implies {j,k} in E.
/// Equivalently, for u < v adjacency is exactly u >= low(v). Every
/// algorithm in this library relies on that property.
struct IntervalGraph {
    Graph graph;
    std::optional<IntervalSet> source;

    int order() const { return graph.order(); }
};

/// low / lowRange / maxlow tables for a numbered interval graph.
///
/// low(a) = min N[a]; lowRange(a,b) = min over k in [a,b] of low(k);
/// maxlow(a) = max over k in [low(a), a] of low(k). lowRange over an
/// empty range yields the +infinity sentinel `inf()` = n + 1, which
/// compares correctly against any vertex id.
class NeighborhoodIndex {
  public:
    NeighborhoodIndex() = default;
    explicit NeighborhoodIndex(const Graph& g);

    int n() const { return n_; }
    int inf() const { return n_ + 1; }

    int low(int a) const { return low_[static_cast<size_t>(a)]; }
    int maxlow(int a) const { return maxlow_[static_cast<size_t>(a)]; }

    int low_range(int a, int b) const {
        if (a > b) return inf();
        return range_[tri(a, b)];
    }

  private:
    size_t tri(int a, int b) const {
        // row a stores ranges [a, a..n], so it starts after a-1 rows of
        // lengths n, n-1, ..., n-a+2
        return static_cast<size_t>(a - 1) * (n_ + 1) - static_cast<size_t>(a) * (a - 1) / 2 +
               (b - a);
    }

    int n_ = 0;
    std::vector<int> low_, maxlow_;
    std::vector<int> range_;
};

/// Builds the interval graph for a list of (left, right) pairs.
///
/// Vertices are renumbered 1..n by increasing right endpoint, ties broken
/// by left endpoint, then by input order. Throws InputError for a
/// degenerate pair (left >= right), naming the 1-based input line.
IntervalGraph from_intervals(const std::vector<std::pair<double, double>>& input);

/// Wraps an explicit edge list that is asserted to carry the ordering
/// property. Throws StructureError if it does not.
IntervalGraph from_ordered_edges(int n, const std::vector<std::pair<int, int>>& edges);

/// True iff for all i < j < k: {i,k} in E implies {j,k} in E.
bool verify_numbering(const Graph& g);

/// Precomputes low / lowRange / maxlow. Throws StructureError when the
/// ordering property fails.
NeighborhoodIndex build_index(const IntervalGraph& g);

/// Induced subgraph on [1, i]; the numbering property is hereditary.
IntervalGraph induced_prefix(const IntervalGraph& g, int i);

}  // namespace ijdom

#endif
