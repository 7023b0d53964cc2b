#include "ijdom/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <sstream>

#include "ijdom/errors.hpp"

namespace ijdom {

namespace {

struct Searcher {
    int n = 0;
    int j = kUnboundedJ;
    std::array<uint64_t, 65> nbr{};  // open neighborhoods, bit v-1
    uint64_t all = 0;
    uint64_t banned0 = 0;
    int max_cover = 1;  // largest closed neighborhood
    uint64_t solution = 0;
    bool found = false;

    struct State {
        uint64_t chosen = 0;
        uint64_t banned = 0;
        std::array<uint8_t, 64> cnt{};  // chosen neighbors per vertex
        int left = 0;                   // remaining cardinality budget
    };

    bool add_vertex(State& st, int v) {
        // returns false when the branch dies
        if (st.left == 0) return false;
        --st.left;
        st.chosen |= 1ull << (v - 1);
        for (uint64_t m = nbr[static_cast<size_t>(v)]; m;) {
            int u = std::countr_zero(m) + 1;
            m &= m - 1;
            ++st.cnt[static_cast<size_t>(u - 1)];
        }
        return true;
    }

    // Forces in every vertex already dominated more than j times; such a
    // vertex can no longer stay outside the set. Returns false on a dead
    // branch (a banned vertex went over, or the budget ran out).
    bool propagate(State& st) {
        if (j >= n) return true;  // bound vacuous
        bool changed = true;
        while (changed) {
            changed = false;
            for (uint64_t m = all & ~st.chosen; m;) {
                int v = std::countr_zero(m) + 1;
                m &= m - 1;
                if (st.cnt[static_cast<size_t>(v - 1)] <= j) continue;
                if (st.banned & (1ull << (v - 1))) return false;
                if (!add_vertex(st, v)) return false;
                changed = true;
            }
        }
        return true;
    }

    int lowest_undominated(const State& st) const {
        for (uint64_t m = all & ~st.chosen; m;) {
            int v = std::countr_zero(m) + 1;
            m &= m - 1;
            if (st.cnt[static_cast<size_t>(v - 1)] == 0) return v;
        }
        return 0;
    }

    int undominated_count(const State& st) const {
        int c = 0;
        for (uint64_t m = all & ~st.chosen; m;) {
            int v = std::countr_zero(m) + 1;
            m &= m - 1;
            if (st.cnt[static_cast<size_t>(v - 1)] == 0) ++c;
        }
        return c;
    }

    bool dfs(State st) {
        if (!propagate(st)) return false;
        int pivot = lowest_undominated(st);
        if (pivot == 0) {
            solution = st.chosen;
            found = true;
            return true;
        }
        if (st.left == 0) return false;
        if (undominated_count(st) > st.left * max_cover) return false;
        uint64_t cands = (nbr[static_cast<size_t>(pivot)] | (1ull << (pivot - 1))) & ~st.banned &
                         ~st.chosen;
        if (!cands) return false;
        while (cands) {
            int u = std::countr_zero(cands) + 1;
            cands &= cands - 1;
            State next = st;
            if (add_vertex(next, u) && dfs(next)) return true;
            st.banned |= 1ull << (u - 1);  // later branches exclude u
        }
        return false;
    }
};

std::vector<int> mask_to_vec(uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

OracleResult min_dom_impl(const Graph& g, int j, const MembershipConstraint& c,
                          const OracleLimits& limits, std::optional<int> budget) {
    int n = g.order();
    bool constrained = !c.empty() || budget.has_value();
    int cap = constrained ? limits.constrained_cap : limits.unconstrained_cap;
    if (n > cap)
        throw ResourceError("instance has " + std::to_string(n) + " vertices; exact search cap is " +
                            std::to_string(cap) + (constrained ? " (constrained)" : " (unconstrained)"));
    if (n > 64) throw ResourceError("exact search uses 64-bit masks; instance too large");

    uint64_t inc = 0, exc = 0;
    for (int v : c.must_include) {
        if (v < 1 || v > n) throw InputError("constraint vertex " + std::to_string(v) + " out of range");
        inc |= 1ull << (v - 1);
    }
    for (int v : c.must_exclude) {
        if (v < 1 || v > n) throw InputError("constraint vertex " + std::to_string(v) + " out of range");
        exc |= 1ull << (v - 1);
    }
    if (inc & exc) throw InputError("constraint forces a vertex both in and out");

    if (n == 0) return OracleResult{0, std::vector<int>{}, false};

    Searcher s;
    s.n = n;
    s.j = j;
    s.all = (n == 64) ? ~0ull : ((1ull << n) - 1);
    s.banned0 = exc;
    for (int v = 1; v <= n; ++v) {
        uint64_t m = 0;
        for (int u : g.neighbors(v)) m |= 1ull << (u - 1);
        s.nbr[static_cast<size_t>(v)] = m;
        s.max_cover = std::max(s.max_cover, std::popcount(m) + 1);
    }

    int lo = std::popcount(inc);
    int hi = budget ? std::min(*budget, n) : n;
    for (int k = lo; k <= hi; ++k) {
        Searcher::State st;
        st.banned = exc;
        st.left = k;
        bool ok = true;
        for (uint64_t m = inc; m && ok;) {
            int v = std::countr_zero(m) + 1;
            m &= m - 1;
            ok = s.add_vertex(st, v);
        }
        // the forced vertices all fit: |inc| <= k by construction of lo
        if (!ok) continue;
        s.found = false;
        if (s.dfs(st)) {
            auto witness = mask_to_vec(s.solution);
            return OracleResult{static_cast<int>(witness.size()), std::move(witness), false};
        }
    }
    OracleResult r;
    r.exceeds_budget = budget.has_value() && *budget < n;
    return r;
}

}  // namespace

OracleResult min_dom(const Graph& g, int j, const MembershipConstraint& c,
                     const OracleLimits& limits) {
    return min_dom_impl(g, j, c, limits, std::nullopt);
}

OracleResult min_dom_bounded(const Graph& g, int j, int budget, const MembershipConstraint& c,
                             const OracleLimits& limits) {
    if (budget < 0) throw InputError("budget must be nonnegative");
    return min_dom_impl(g, j, c, limits, budget);
}

int GammaKey::prefix() const {
    switch (kind) {
        case GammaKind::kG0Prefix:
        case GammaKind::kG1Prefix:
        case GammaKind::kGammaFull:
            return a;
        default:
            return b;
    }
}

void validate_key(const GammaKey& key, int n) {
    auto bad = [&](const char* what) { throw InputError(std::string("malformed table key: ") + what); };
    switch (key.kind) {
        case GammaKind::kG0Prefix:
        case GammaKind::kG1Prefix:
        case GammaKind::kGammaFull:
            if (key.a < 1 || key.a > n) bad("prefix out of range");
            break;
        case GammaKind::kG0Range:
            if (!(1 <= key.a && key.a <= key.b && key.b <= n)) bad("need 1 <= j <= i <= n");
            break;
        case GammaKind::kG0Single:
            if (!(1 <= key.a && key.a <= key.c && key.c < key.b && key.b <= n))
                bad("need 1 <= j <= k < i <= n");
            break;
        case GammaKind::kG1Tail:
            if (!(1 <= key.a && key.a < key.b && key.b <= n)) bad("need 1 <= j < i <= n");
            break;
        case GammaKind::kG1Pair:
            if (!(1 <= key.a && key.a <= key.c && key.c < key.b && key.b <= n))
                bad("need 1 <= k <= j < i <= n");
            break;
        case GammaKind::kG1Triple:
            if (!(1 <= key.a && key.a <= key.d && key.d < key.c && key.c < key.b && key.b <= n))
                bad("need 1 <= l <= k < j < i <= n");
            break;
        case GammaKind::kG11Run:
            if (!(1 <= key.a && key.a < key.d && key.d < key.c && key.c < key.b && key.b <= n))
                bad("need 1 <= l < k < j < i <= n");
            break;
    }
}

MembershipConstraint key_constraint(const GammaKey& key) {
    MembershipConstraint c;
    auto exclude_range = [&](int lo, int hi, std::initializer_list<int> skip) {
        for (int v = lo; v <= hi; ++v)
            if (std::find(skip.begin(), skip.end(), v) == skip.end()) c.must_exclude.push_back(v);
    };
    switch (key.kind) {
        case GammaKind::kG0Prefix:
            exclude_range(key.a, key.a, {});
            break;
        case GammaKind::kG0Range:
            exclude_range(key.a, key.b, {});
            break;
        case GammaKind::kG0Single:
            c.must_include = {key.c};
            exclude_range(key.a, key.b, {key.c});
            break;
        case GammaKind::kG1Prefix:
            c.must_include = {key.a};
            break;
        case GammaKind::kG1Tail:
            c.must_include = {key.b};
            exclude_range(key.a, key.b - 1, {});
            break;
        case GammaKind::kG1Pair:
            c.must_include = {key.b, key.c};
            exclude_range(key.a, key.b - 1, {key.c});
            break;
        case GammaKind::kG1Triple:
            c.must_include = {key.b, key.c, key.d};
            exclude_range(key.a, key.b - 1, {key.c, key.d});
            break;
        case GammaKind::kG11Run:
            c.must_include = {key.b, key.c};
            for (int v = key.a; v <= key.d; ++v) c.must_include.push_back(v);
            exclude_range(key.d + 1, key.b - 1, {key.c});
            break;
        case GammaKind::kGammaFull:
            break;
    }
    return c;
}

OracleResult gamma_oracle(const IntervalGraph& g, const GammaKey& key, const OracleLimits& limits) {
    validate_key(key, g.order());
    Graph prefix = g.graph.prefix(key.prefix());
    return min_dom(prefix, 2, key_constraint(key), limits);
}

std::string to_string(const GammaKey& key) {
    std::ostringstream os;
    switch (key.kind) {
        case GammaKind::kG0Prefix: os << "g0(" << key.a << ")"; break;
        case GammaKind::kG0Range: os << "g0(" << key.a << "," << key.b << ")"; break;
        case GammaKind::kG0Single: os << "g0(" << key.a << "," << key.b << ":" << key.c << ")"; break;
        case GammaKind::kG1Prefix: os << "g1(" << key.a << ")"; break;
        case GammaKind::kG1Tail: os << "g1(" << key.a << "," << key.b << ":i)"; break;
        case GammaKind::kG1Pair:
            os << "g1(" << key.a << "," << key.b << ":i," << key.c << ")";
            break;
        case GammaKind::kG1Triple:
            os << "g1(" << key.a << "," << key.b << ":i," << key.c << "," << key.d << ")";
            break;
        case GammaKind::kG11Run:
            os << "g11(" << key.a << "," << key.b << ":i," << key.c << "," << key.d << ")";
            break;
        case GammaKind::kGammaFull: os << "gamma(" << key.a << ")"; break;
    }
    return os.str();
}

}  // namespace ijdom
