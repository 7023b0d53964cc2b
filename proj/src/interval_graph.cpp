#include "ijdom/interval_graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "ijdom/errors.hpp"

namespace ijdom {

NeighborhoodIndex::NeighborhoodIndex(const Graph& g) : n_(g.order()) {
    low_.assign(static_cast<size_t>(n_) + 1, 0);
    maxlow_.assign(static_cast<size_t>(n_) + 1, 0);
    for (int v = 1; v <= n_; ++v) {
        int lo = v;
        for (int u : g.neighbors(v)) lo = std::min(lo, u);
        low_[static_cast<size_t>(v)] = lo;
    }
    for (int v = 1; v <= n_; ++v) {
        int m = 0;
        for (int k = low(v); k <= v; ++k) m = std::max(m, low(k));
        maxlow_[static_cast<size_t>(v)] = m;
    }
    range_.assign(static_cast<size_t>(n_) * (n_ + 1) / 2, 0);
    for (int a = 1; a <= n_; ++a) {
        int m = inf();
        for (int b = a; b <= n_; ++b) {
            m = std::min(m, low(b));
            range_[tri(a, b)] = m;
        }
    }
}

IntervalGraph from_intervals(const std::vector<std::pair<double, double>>& input) {
    if (input.empty()) throw InputError("interval list is empty");
    for (size_t i = 0; i < input.size(); ++i) {
        if (!(input[i].first < input[i].second))
            throw InputError("degenerate interval at line " + std::to_string(i + 1) +
                             ": left must be < right");
    }
    std::vector<size_t> order(input.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (input[a].second != input[b].second) return input[a].second < input[b].second;
        return input[a].first < input[b].first;
    });

    int n = static_cast<int>(input.size());
    IntervalSet set(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) {
        const auto& iv = input[order[static_cast<size_t>(v - 1)]];
        set[static_cast<size_t>(v - 1)] = Interval{v, iv.first, iv.second};
    }

    Graph g(n);
    for (int v = 1; v <= n; ++v)
        for (int u = 1; u < v; ++u) {
            const auto& a = set[static_cast<size_t>(u - 1)];
            const auto& b = set[static_cast<size_t>(v - 1)];
            if (a.right >= b.left && b.right >= a.left) g.add_edge(u, v);
        }
    g.finalize();
    assert(verify_numbering(g));
    return IntervalGraph{std::move(g), std::move(set)};
}

IntervalGraph from_ordered_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 0) throw InputError("graph must have at least one vertex");
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n || u == v)
            throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                             "} is out of range");
    }
    Graph g(n, edges);
    if (!verify_numbering(g))
        throw StructureError("edge list violates the vertex ordering property");
    return IntervalGraph{std::move(g), std::nullopt};
}

bool verify_numbering(const Graph& g) {
    int n = g.order();
    for (int k = 3; k <= n; ++k)
        for (int i = 1; i < k; ++i) {
            if (!g.adjacent(i, k)) continue;
            for (int j = i + 1; j < k; ++j)
                if (!g.adjacent(j, k)) return false;
        }
    return true;
}

NeighborhoodIndex build_index(const IntervalGraph& g) {
    if (!verify_numbering(g.graph))
        throw StructureError("vertex ordering property violated; the tables would be meaningless");
    return NeighborhoodIndex(g.graph);
}

IntervalGraph induced_prefix(const IntervalGraph& g, int i) {
    if (i < 1 || i > g.order())
        throw InputError("prefix length " + std::to_string(i) + " out of range");
    IntervalGraph h{g.graph.prefix(i), std::nullopt};
    if (g.source) {
        IntervalSet s(g.source->begin(), g.source->begin() + i);
        h.source = std::move(s);
    }
    return h;
}

}  // namespace ijdom
