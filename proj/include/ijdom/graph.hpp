#ifndef IJDOM_GRAPH_HPP
#define IJDOM_GRAPH_HPP

#include <utility>
#include <vector>

namespace ijdom {

/// Simple undirected graph with 1-based vertex ids.
///
/// Vertices are [1, n]. Immutable once constructed; all queries are
/// const and safe for concurrent readers.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n + 1) * (n + 1), 0), neighbors_(n + 1) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
        finalize();
    }

    int order() const { return n_; }

    bool adjacent(int u, int v) const { return adj_[at(u, v)] != 0; }

    /// Sorted ascending; does not include v itself.
    const std::vector<int>& neighbors(int v) const { return neighbors_[static_cast<size_t>(v)]; }

    long long edge_count() const { return m_; }

    /// Builder interface: add_edge calls must be followed by finalize().
    void add_edge(int u, int v) {
        if (u == v) return;
        if (!adj_[at(u, v)]) {
            adj_[at(u, v)] = 1;
            adj_[at(v, u)] = 1;
            ++m_;
        }
    }

    void finalize() {
        for (int v = 1; v <= n_; ++v) {
            auto& nb = neighbors_[static_cast<size_t>(v)];
            nb.clear();
            for (int u = 1; u <= n_; ++u)
                if (u != v && adjacent(u, v)) nb.push_back(u);
        }
    }

    /// Induced subgraph on vertices [1, i], keeping ids.
    Graph prefix(int i) const {
        Graph h(i);
        for (int v = 1; v <= i; ++v)
            for (int u = 1; u < v; ++u)
                if (adjacent(u, v)) h.add_edge(u, v);
        h.finalize();
        return h;
    }

  private:
    size_t at(int u, int v) const { return static_cast<size_t>(u) * (n_ + 1) + v; }

    int n_ = 0;
    long long m_ = 0;
    std::vector<char> adj_;
    std::vector<std::vector<int>> neighbors_;
};

}  // namespace ijdom

#endif
