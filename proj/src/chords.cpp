#include "ijdom/chords.hpp"

#include <algorithm>
#include <stdexcept>

#include "ijdom/errors.hpp"

namespace ijdom {

void validate_diagram(const ChordDiagram& d) {
    int pos = d.positions();
    std::vector<char> used(static_cast<size_t>(pos), 0);
    for (const auto& ch : d.chords) {
        for (int p : {ch.p, ch.q}) {
            if (p < 0 || p >= pos)
                throw InputError("chord position " + std::to_string(p) + " outside [0," +
                                 std::to_string(pos) + ")");
            if (used[static_cast<size_t>(p)])
                throw InputError("duplicate chord position " + std::to_string(p));
            used[static_cast<size_t>(p)] = 1;
        }
        if (ch.p == ch.q) throw InputError("chord with equal endpoints " + std::to_string(ch.p));
    }
}

namespace {

bool crossing(int p, int q, int r, int s) {
    // exactly one of r, s strictly between p and q along the circle
    if (p > q) std::swap(p, q);
    bool rin = p < r && r < q;
    bool sin_ = p < s && s < q;
    return rin != sin_;
}

bool overlap_no_containment(int p, int q, int r, int s) {
    // the same chords as cut-open intervals
    if (p > q) std::swap(p, q);
    if (r > s) std::swap(r, s);
    bool overlap = p <= s && r <= q;
    bool contains = (p <= r && s <= q) || (r <= p && q <= s);
    return overlap && !contains;
}

}  // namespace

Graph chords_to_graph(const ChordDiagram& d) {
    validate_diagram(d);
    int n = d.size();
    Graph g(n);
    for (int v = 1; v <= n; ++v)
        for (int u = 1; u < v; ++u) {
            const auto& a = d.chords[static_cast<size_t>(u - 1)];
            const auto& b = d.chords[static_cast<size_t>(v - 1)];
            bool byCross = crossing(a.p, a.q, b.p, b.q);
            bool byInterval = overlap_no_containment(a.p, a.q, b.p, b.q);
            if (byCross != byInterval)
                throw std::logic_error("chord adjacency derivations disagree");
            if (byCross) g.add_edge(u, v);
        }
    g.finalize();
    return g;
}

}  // namespace ijdom
