#include "ijdom/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ijdom/domination.hpp"
#include "ijdom/errors.hpp"

namespace ijdom {

namespace {

void validate_formula(const CnfFormula& f) {
    for (size_t ci = 0; ci < f.clauses.size(); ++ci) {
        const auto& cl = f.clauses[ci];
        std::set<int> vars;
        for (int lit : cl.lits) {
            if (lit == 0 || std::abs(lit) > f.num_vars)
                throw InputError("literal out of range in clause " + std::to_string(ci + 1));
            vars.insert(std::abs(lit));
        }
        if (vars.size() != 3)
            throw DomainError("clause " + std::to_string(ci + 1) +
                              " repeats a variable; the construction assumes three distinct "
                              "variables per clause");
    }
}

std::string lbl(const std::string& base, int j, int l = 0) {
    std::string s = base + "_" + std::to_string(j);
    if (l) s += "_" + std::to_string(l);
    return s;
}

// One consistency link between two consecutive occurrences of a variable.
struct Link {
    int id;                  // 1-based
    int var;
    int j1, l1;              // first occurrence (clause, literal slot), 1-based
    int j2, l2;              // second occurrence
    bool same_polarity;

    // chord roles: same polarity -> tf (truth->false) and ft (false->truth);
    // opposite polarity -> tt and ff
    std::string first_label() const { return lbl(same_polarity ? "tf" : "tt", id); }
    std::string second_label() const { return lbl(same_polarity ? "ft" : "ff", id); }
};

std::vector<Link> collect_links(const CnfFormula& f) {
    std::map<int, std::vector<std::pair<int, int>>> occ;  // var -> (clause, slot), clause order
    for (size_t ci = 0; ci < f.clauses.size(); ++ci)
        for (int s = 0; s < 3; ++s)
            occ[std::abs(f.clauses[ci].lits[static_cast<size_t>(s)])].emplace_back(
                static_cast<int>(ci) + 1, s + 1);
    std::vector<Link> links;
    for (auto& [var, where] : occ)
        for (size_t q = 0; q + 1 < where.size(); ++q) {
            auto [j1, l1] = where[q];
            auto [j2, l2] = where[q + 1];
            int lit1 = f.clauses[static_cast<size_t>(j1 - 1)].lits[static_cast<size_t>(l1 - 1)];
            int lit2 = f.clauses[static_cast<size_t>(j2 - 1)].lits[static_cast<size_t>(l2 - 1)];
            Link lk;
            lk.id = static_cast<int>(links.size()) + 1;
            lk.var = var;
            lk.j1 = j1;
            lk.l1 = l1;
            lk.j2 = j2;
            lk.l2 = l2;
            lk.same_polarity = (lit1 > 0) == (lit2 > 0);
            links.push_back(lk);
        }
    return links;
}

// Token stream: every chord label appears exactly twice; positions are
// assigned by emission order.
struct Emitter {
    std::vector<std::string> tokens;
    std::vector<std::string> order;  // first-appearance order of labels
    std::map<std::string, int> seen;

    void tok(const std::string& label) {
        auto [it, fresh] = seen.emplace(label, 0);
        if (fresh) order.push_back(label);
        it->second++;
        tokens.push_back(label);
    }

    // claw block: three nested independent leaves crossing the center,
    // with the anchored chord's endpoint tucked between leaf ends and the
    // center's right end
    void claw(const std::string& center, const std::string& leafbase,
              const std::string& anchor) {
        tok(leafbase + "a");
        tok(leafbase + "b");
        tok(leafbase + "c");
        tok(center);
        tok(leafbase + "c");
        tok(leafbase + "b");
        tok(leafbase + "a");
        tok(anchor);
        tok(center);
    }
};

}  // namespace

int GadgetInstance::chord_id(const std::string& label) const {
    auto it = labels.find(label);
    if (it == labels.end()) throw InputError("unknown chord role " + label);
    return it->second;
}

long long target_k(const CnfFormula& f) {
    validate_formula(f);
    std::map<int, int> occ;
    for (const auto& cl : f.clauses)
        for (int lit : cl.lits) occ[std::abs(lit)]++;
    long long t = 0;
    for (auto& [v, c] : occ) t += std::max(0, c - 1);
    return 7ll * static_cast<long long>(f.clauses.size()) + 2ll * t;
}

GadgetInstance build_gadget(const CnfFormula& f) {
    validate_formula(f);
    auto links = collect_links(f);

    // connection endpoints per zone: incoming (bare) tokens first, then
    // outgoing claw blocks, both in link order
    std::map<std::pair<int, int>, std::vector<std::string>> truth_bare, false_bare;
    std::map<std::pair<int, int>, std::vector<const Link*>> truth_out, false_out;
    for (const auto& lk : links) {
        if (lk.same_polarity) {
            truth_out[{lk.j1, lk.l1}].push_back(&lk);   // tf starts in the truth interval
            false_out[{lk.j1, lk.l1}].push_back(&lk);   // ft starts in the false interval
            false_bare[{lk.j2, lk.l2}].push_back(lk.first_label());
            truth_bare[{lk.j2, lk.l2}].push_back(lk.second_label());
        } else {
            truth_out[{lk.j1, lk.l1}].push_back(&lk);   // tt
            false_out[{lk.j1, lk.l1}].push_back(&lk);   // ff
            truth_bare[{lk.j2, lk.l2}].push_back(lk.first_label());
            false_bare[{lk.j2, lk.l2}].push_back(lk.second_label());
        }
    }

    Emitter em;
    int m = static_cast<int>(f.clauses.size());
    for (int j = 1; j <= m; ++j) {
        // three literal blocks
        for (int l = 1; l <= 3; ++l) {
            em.tok(lbl("f", j, l));
            for (const auto& s : false_bare[{j, l}]) em.tok(s);
            for (const Link* lk : false_out[{j, l}]) {
                const std::string cc = lk->same_polarity ? lk->second_label() : lbl("ff", lk->id);
                em.claw(lbl("sf", lk->id), lbl("sfleaf", lk->id), cc);
            }
            em.tok(lbl("p1", j, l));
            em.tok(lbl("p2", j, l));
            em.tok(lbl("t", j, l));
            em.tok(lbl("f", j, l));
            em.tok(lbl("p2", j, l));
            em.tok(lbl("p1", j, l));
            for (const auto& s : truth_bare[{j, l}]) em.tok(s);
            for (const Link* lk : truth_out[{j, l}]) {
                const std::string cc = lk->first_label();
                em.claw(lbl("st", lk->id), lbl("stleaf", lk->id), cc);
            }
            em.tok(lbl("a1", j, l));
            em.tok(lbl("a2", j, l));
            em.tok(lbl("t", j, l));
        }
        // cluster: guards, u/w chords, claw-anchored centers, a right ends
        em.tok(lbl("c1leaf", j) + "a");
        em.tok(lbl("c1leaf", j) + "b");
        em.tok(lbl("c1leaf", j) + "c");
        em.tok(lbl("c1", j));
        em.tok(lbl("c1leaf", j) + "c");
        em.tok(lbl("c1leaf", j) + "b");
        em.tok(lbl("c1leaf", j) + "a");
        em.tok(lbl("g1", j));
        em.tok(lbl("c1", j));
        em.tok(lbl("u12", j));
        em.tok(lbl("u13", j));
        em.tok(lbl("a1", j, 1));
        em.tok(lbl("a2", j, 1));
        em.tok(lbl("u23", j));
        em.tok(lbl("g1", j));
        em.tok(lbl("w23", j));
        em.tok(lbl("w12", j));
        em.tok(lbl("u13", j));
        em.tok(lbl("a1", j, 2));
        em.tok(lbl("a2", j, 2));
        em.tok(lbl("w13", j));
        em.tok(lbl("w23", j));
        em.tok(lbl("w12", j));
        em.tok(lbl("g2", j));
        em.tok(lbl("u12", j));
        em.tok(lbl("a1", j, 3));
        em.tok(lbl("a2", j, 3));
        em.tok(lbl("u23", j));
        em.tok(lbl("w13", j));
        em.tok(lbl("c2leaf", j) + "a");
        em.tok(lbl("c2leaf", j) + "b");
        em.tok(lbl("c2leaf", j) + "c");
        em.tok(lbl("c2", j));
        em.tok(lbl("c2leaf", j) + "c");
        em.tok(lbl("c2leaf", j) + "b");
        em.tok(lbl("c2leaf", j) + "a");
        em.tok(lbl("g2", j));
        em.tok(lbl("c2", j));
    }

    // assemble the diagram
    std::map<std::string, std::pair<int, int>> ends;
    for (size_t pos = 0; pos < em.tokens.size(); ++pos) {
        auto& e = ends.emplace(em.tokens[pos], std::make_pair(-1, -1)).first->second;
        if (e.first < 0)
            e.first = static_cast<int>(pos);
        else if (e.second < 0)
            e.second = static_cast<int>(pos);
        else
            throw std::logic_error("chord " + em.tokens[pos] + " has more than two endpoints");
    }
    GadgetInstance inst;
    for (const auto& label : em.order) {
        auto e = ends.at(label);
        if (e.second < 0) throw std::logic_error("chord " + label + " has a single endpoint");
        inst.labels[label] = static_cast<int>(inst.diagram.chords.size()) + 1;
        inst.diagram.chords.push_back(Chord{label, e.first, e.second});
    }
    validate_diagram(inst.diagram);

    std::map<int, int> occ;
    for (const auto& cl : f.clauses)
        for (int lit : cl.lits) occ[std::abs(lit)]++;
    int t = 0;
    for (auto& [v, c] : occ) t += std::max(0, c - 1);
    inst.t = t;
    inst.k = 7ll * m + 2ll * t;
    if (inst.diagram.size() != 34 * m + 10 * t)
        throw std::logic_error("chord inventory does not match 34m + 10t");
    return inst;
}

bool sat_brute(const CnfFormula& f) {
    validate_formula(f);
    if (f.num_vars > 20)
        throw ResourceError("exhaustive SAT check capped at 20 variables, got " +
                            std::to_string(f.num_vars));
    if (f.clauses.empty()) return true;
    for (uint32_t m = 0; m < (1u << f.num_vars); ++m) {
        bool ok = true;
        for (const auto& cl : f.clauses) {
            bool sat = false;
            for (int lit : cl.lits) {
                bool v = (m >> (std::abs(lit) - 1)) & 1;
                if (lit < 0) v = !v;
                if (v) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

namespace {

bool literal_true(const Clause& cl, int slot, const Assignment& a) {
    int lit = cl.lits[static_cast<size_t>(slot - 1)];
    auto it = a.values.find(std::abs(lit));
    bool v = it != a.values.end() && it->second;
    return lit > 0 ? v : !v;
}

}  // namespace

std::vector<int> intended_dominating_set(const GadgetInstance& inst, const CnfFormula& f,
                                         const Assignment& a) {
    std::vector<int> d;
    for (size_t ci = 0; ci < f.clauses.size(); ++ci) {
        int j = static_cast<int>(ci) + 1;
        const auto& cl = f.clauses[ci];
        int pattern = 0;
        for (int l = 1; l <= 3; ++l) {
            bool tv = literal_true(cl, l, a);
            if (tv) pattern |= 1 << (l - 1);
            d.push_back(inst.chord_id(lbl(tv ? "t" : "f", j, l)));
        }
        if (pattern == 0)
            throw InputError("assignment does not satisfy clause " + std::to_string(j));
        // (u, w) pair by true-literal pattern; every case keeps all
        // counts in the cluster within [1, 2]
        const char* u;
        const char* w;
        switch (pattern) {
            case 0b001: u = "u23"; w = "w23"; break;          // only first literal true
            case 0b100: u = "u12"; w = "w23"; break;          // only third
            case 0b101: u = "u23"; w = "w23"; break;          // first and third
            default: u = "u13"; w = "w13"; break;             // second literal true, or {1,2},{2,3},{1,2,3}
        }
        d.push_back(inst.chord_id(lbl(u, j)));
        d.push_back(inst.chord_id(lbl(w, j)));
        d.push_back(inst.chord_id(lbl("c1", j)));
        d.push_back(inst.chord_id(lbl("c2", j)));
    }
    for (const auto& [label, id] : inst.labels)
        if (label.rfind("st_", 0) == 0 || label.rfind("sf_", 0) == 0) d.push_back(id);
    std::sort(d.begin(), d.end());
    return d;
}

Assignment decode_assignment(const GadgetInstance& inst, const CnfFormula& f,
                             const std::vector<int>& d) {
    if (static_cast<long long>(d.size()) > inst.k)
        throw InputError("dominating set of size " + std::to_string(d.size()) +
                         " exceeds the target k=" + std::to_string(inst.k));
    std::set<int> in(d.begin(), d.end());
    Assignment a;
    for (int v = 1; v <= f.num_vars; ++v) a.values[v] = false;
    std::map<int, int> decided;  // var -> +1 true / -1 false
    for (size_t ci = 0; ci < f.clauses.size(); ++ci) {
        int j = static_cast<int>(ci) + 1;
        for (int l = 1; l <= 3; ++l) {
            bool tIn = in.count(inst.chord_id(lbl("t", j, l))) > 0;
            bool fIn = in.count(inst.chord_id(lbl("f", j, l))) > 0;
            if (tIn == fIn)
                throw DomainError("clause " + std::to_string(j) + " literal " + std::to_string(l) +
                                  (tIn ? " has both" : " has neither") +
                                  " of its t/f chords in the set");
            int lit = f.clauses[ci].lits[static_cast<size_t>(l - 1)];
            bool varValue = (lit > 0) == tIn;
            int want = varValue ? 1 : -1;
            auto [it, fresh] = decided.emplace(std::abs(lit), want);
            if (!fresh && it->second != want)
                throw DomainError("occurrences of variable " + std::to_string(std::abs(lit)) +
                                  " decode to conflicting values");
            a.values[std::abs(lit)] = varValue;
        }
    }
    return a;
}

ReductionReport verify_reduction_small(const CnfFormula& f, int cap) {
    GadgetInstance inst = build_gadget(f);
    ReductionReport rep;
    rep.k = inst.k;
    rep.chord_count = inst.diagram.size();
    if (rep.chord_count > cap)
        throw ResourceError("gadget has " + std::to_string(rep.chord_count) +
                            " chords; the exact verification cap is " + std::to_string(cap));
    rep.satisfiable = sat_brute(f);
    if (rep.chord_count == 0) {
        rep.dominating_at_k = true;
        rep.minimum = 0;
        rep.agree = rep.satisfiable;
        rep.decoded_ok = true;
        return rep;
    }
    Graph g = chords_to_graph(inst.diagram);
    OracleLimits lim{cap, cap};
    OracleResult res = min_dom_bounded(g, 2, static_cast<int>(inst.k), {}, lim);
    rep.dominating_at_k = res.defined();
    if (res.defined()) {
        rep.minimum = *res.value;
        rep.witness = *res.witness;
        Assignment a = decode_assignment(inst, f, rep.witness);
        rep.decoded_ok = a.satisfies(f);
    }
    rep.agree = rep.satisfiable == rep.dominating_at_k;
    return rep;
}

namespace {

struct ContractChecker {
    const GadgetInstance& inst;
    const Graph& g;
    std::vector<std::string>& bad;

    int id(const std::string& label) const { return inst.chord_id(label); }
    bool adj(const std::string& x, const std::string& y) const {
        return g.adjacent(id(x), id(y));
    }

    void expect(bool cond, const std::string& what) {
        if (!cond) bad.push_back(what);
    }

    void expect_adj(const std::string& x, const std::string& y, bool want) {
        expect(adj(x, y) == want,
               x + (want ? " must cross " : " must not cross ") + y);
    }

    // exact neighborhood as labels
    void expect_exact(const std::string& x, std::set<std::string> want) {
        std::set<std::string> got;
        for (int u : g.neighbors(id(x))) got.insert(inst.diagram.chords[static_cast<size_t>(u - 1)].label);
        if (got != want) {
            std::string msg = x + " crosses {";
            for (const auto& s : got) msg += s + " ";
            msg += "} expected {";
            for (const auto& s : want) msg += s + " ";
            msg += "}";
            bad.push_back(msg);
        }
    }
};

}  // namespace

std::vector<std::string> check_gadget_contract(const GadgetInstance& inst, const CnfFormula& f) {
    std::vector<std::string> bad;
    Graph g = chords_to_graph(inst.diagram);
    ContractChecker ck{inst, g, bad};

    int m = static_cast<int>(f.clauses.size());
    auto links = collect_links(f);
    if (inst.diagram.size() != 34 * m + 10 * inst.t)
        bad.push_back("chord count is not 34m + 10t");
    if (inst.k != 7ll * m + 2ll * inst.t) bad.push_back("k is not 7m + 2t");

    for (int j = 1; j <= m; ++j) {
        for (int l = 1; l <= 3; ++l) {
            // p pair: exactly {t, f}, mutually independent
            for (const char* p : {"p1", "p2"}) {
                std::set<std::string> want{lbl("t", j, l), lbl("f", j, l)};
                ck.expect_exact(lbl(p, j, l), want);
            }
            ck.expect_adj(lbl("p1", j, l), lbl("p2", j, l), false);
            ck.expect_adj(lbl("t", j, l), lbl("f", j, l), true);
            for (const char* a : {"a1", "a2"}) {
                ck.expect_adj(lbl("t", j, l), lbl(a, j, l), true);
                ck.expect_adj(lbl("f", j, l), lbl(a, j, l), false);
            }
        }
        // u/w chords versus the a pairs
        auto a_par = [&](const std::string& chord, int l, bool want) {
            ck.expect_adj(chord, lbl("a1", j, l), want);
            ck.expect_adj(chord, lbl("a2", j, l), want);
        };
        a_par(lbl("u13", j), 1, true);
        a_par(lbl("u13", j), 2, false);
        a_par(lbl("u13", j), 3, false);
        a_par(lbl("u12", j), 1, true);
        a_par(lbl("u12", j), 2, true);
        a_par(lbl("u12", j), 3, false);
        a_par(lbl("u23", j), 1, false);
        a_par(lbl("u23", j), 2, true);
        a_par(lbl("u23", j), 3, true);
        a_par(lbl("w13", j), 1, false);
        a_par(lbl("w13", j), 2, false);
        a_par(lbl("w13", j), 3, true);
        a_par(lbl("w12", j), 2, true);
        a_par(lbl("w12", j), 1, false);
        a_par(lbl("w12", j), 3, false);
        a_par(lbl("w23", j), 2, true);
        a_par(lbl("w23", j), 1, false);
        a_par(lbl("w23", j), 3, false);
        ck.expect_adj(lbl("w12", j), lbl("w23", j), true);
        ck.expect_adj(lbl("w12", j), lbl("u13", j), true);
        ck.expect_adj(lbl("w23", j), lbl("u13", j), true);
        ck.expect_adj(lbl("w12", j), lbl("w13", j), true);
        ck.expect_adj(lbl("w23", j), lbl("w13", j), true);
        // guards
        for (const char* u : {"u12", "u13", "u23"}) ck.expect_adj(lbl("g1", j), lbl(u, j), true);
        ck.expect_adj(lbl("g1", j), lbl("c1", j), true);
        for (const char* w : {"w12", "w13", "w23"}) ck.expect_adj(lbl("g1", j), lbl(w, j), false);
        for (const char* u : {"u12", "u23", "w13"}) ck.expect_adj(lbl("g2", j), lbl(u, j), true);
        ck.expect_adj(lbl("g2", j), lbl("c2", j), true);
        for (const char* w : {"u13", "w12", "w23"}) ck.expect_adj(lbl("g2", j), lbl(w, j), false);
        // claw centers: exactly three independent leaves plus the guard
        for (const char* c : {"c1", "c2"}) {
            std::string guard = c[1] == '1' ? lbl("g1", j) : lbl("g2", j);
            std::string leaf = std::string(c) + "leaf";
            std::set<std::string> want{guard, lbl(leaf, j) + "a", lbl(leaf, j) + "b",
                                       lbl(leaf, j) + "c"};
            ck.expect_exact(lbl(c, j), want);
            for (const char* x : {"a", "b", "c"})
                ck.expect_exact(lbl(leaf, j) + x, {lbl(c, j)});
        }
    }
    // connection chords: anchored claws and interval straddlers
    for (const auto& lk : links) {
        std::string first = lk.first_label();
        std::string second = lk.second_label();
        ck.expect_exact(lbl("st", lk.id), {first, lbl("stleaf", lk.id) + "a",
                                           lbl("stleaf", lk.id) + "b", lbl("stleaf", lk.id) + "c"});
        ck.expect_exact(lbl("sf", lk.id), {second, lbl("sfleaf", lk.id) + "a",
                                           lbl("sfleaf", lk.id) + "b", lbl("sfleaf", lk.id) + "c"});
        // first chord leaves the truth interval of (j1, l1)
        ck.expect_adj(first, lbl("t", lk.j1, lk.l1), true);
        ck.expect_adj(first, lbl("f", lk.j1, lk.l1), false);
        // second chord leaves the false interval of (j1, l1)
        ck.expect_adj(second, lbl("f", lk.j1, lk.l1), true);
        ck.expect_adj(second, lbl("t", lk.j1, lk.l1), false);
        if (lk.same_polarity) {
            ck.expect_adj(first, lbl("f", lk.j2, lk.l2), true);   // tf
            ck.expect_adj(first, lbl("t", lk.j2, lk.l2), false);
            ck.expect_adj(second, lbl("t", lk.j2, lk.l2), true);  // ft
            ck.expect_adj(second, lbl("f", lk.j2, lk.l2), false);
        } else {
            ck.expect_adj(first, lbl("t", lk.j2, lk.l2), true);   // tt
            ck.expect_adj(first, lbl("f", lk.j2, lk.l2), false);
            ck.expect_adj(second, lbl("f", lk.j2, lk.l2), true);  // ff
            ck.expect_adj(second, lbl("t", lk.j2, lk.l2), false);
        }
    }
    return bad;
}

}  // namespace ijdom
