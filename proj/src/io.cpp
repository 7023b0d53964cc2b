#include "ijdom/io.hpp"

#include <fstream>
#include <sstream>

#include "ijdom/errors.hpp"

namespace ijdom {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw InputError("parse error at line " + std::to_string(line) + ": " + what);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

bool skippable(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

std::vector<std::pair<double, double>> read_intervals(std::istream& in) {
    std::vector<std::pair<double, double>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (skippable(line)) continue;
        std::istringstream ss(line);
        double l, r;
        if (!(ss >> l >> r)) parse_fail(no, "expected `left right`");
        std::string rest;
        if (ss >> rest && rest[0] != '#') parse_fail(no, "trailing junk: " + rest);
        if (!(l < r)) parse_fail(no, "degenerate interval: left must be < right");
        out.emplace_back(l, r);
    }
    if (out.empty()) throw InputError("no intervals in input");
    return out;
}

std::vector<std::pair<double, double>> read_intervals_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_intervals(in);
}

void write_intervals(std::ostream& out, const IntervalSet& s) {
    for (const auto& iv : s) out << iv.left << " " << iv.right << "\n";
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int no = 0;
    int n = -1;
    long long m = -1, seen = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++no;
        if (skippable(line)) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "c") continue;  // DIMACS comment
        if (tag == "p") {
            std::string fmt;
            if (!(ss >> fmt >> n >> m) || fmt != "edge" || n < 1)
                parse_fail(no, "expected `p edge <n> <m>`");
            continue;
        }
        if (tag == "e") {
            if (n < 0) parse_fail(no, "edge before `p edge` header");
            int u, v;
            if (!(ss >> u >> v)) parse_fail(no, "expected `e <u> <v>`");
            if (u < 1 || u > n || v < 1 || v > n || u == v) parse_fail(no, "edge out of range");
            edges.emplace_back(u, v);
            ++seen;
            continue;
        }
        parse_fail(no, "unknown record `" + tag + "`");
    }
    if (n < 0) throw InputError("missing `p edge` header");
    if (m >= 0 && m != seen)
        throw InputError("header announced " + std::to_string(m) + " edges, found " +
                         std::to_string(seen));
    return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p edge " << g.order() << " " << g.edge_count() << "\n";
    for (int v = 1; v <= g.order(); ++v)
        for (int u : g.neighbors(v))
            if (u < v) out << "e " << u << " " << v << "\n";
}

ChordDiagram read_chords(std::istream& in) {
    std::string line;
    int no = 0;
    int announced = -1;
    ChordDiagram d;
    while (std::getline(in, line)) {
        ++no;
        if (skippable(line)) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "c") {
            if (!(ss >> announced) || announced < 0) parse_fail(no, "expected `c <N>`");
            continue;
        }
        if (tag == "h") {
            Chord ch;
            if (!(ss >> ch.label >> ch.p >> ch.q)) parse_fail(no, "expected `h <label> <p> <q>`");
            d.chords.push_back(ch);
            continue;
        }
        parse_fail(no, "unknown record `" + tag + "`");
    }
    if (announced < 0) throw InputError("missing `c <N>` header");
    if (announced != d.size())
        throw InputError("header announced " + std::to_string(announced) + " chords, found " +
                         std::to_string(d.size()));
    validate_diagram(d);
    return d;
}

ChordDiagram read_chords_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_chords(in);
}

void write_chords(std::ostream& out, const ChordDiagram& d,
                  const std::vector<std::string>& header_comments) {
    for (const auto& hc : header_comments) out << "# " << hc << "\n";
    out << "c " << d.size() << "\n";
    for (const auto& ch : d.chords) out << "h " << ch.label << " " << ch.p << " " << ch.q << "\n";
}

void write_label_map(std::ostream& out, const GadgetInstance& inst) {
    for (const auto& [role, id] : inst.labels) out << "label " << id << " " << role << "\n";
}

CnfFormula read_dimacs_cnf(std::istream& in) {
    std::string line;
    int no = 0;
    int vars = -1, clauses = -1;
    CnfFormula f;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        ++no;
        if (skippable(line)) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            if (!(ss >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0)
                parse_fail(no, "expected `p cnf <vars> <clauses>`");
            continue;
        }
        if (vars < 0) parse_fail(no, "clause before `p cnf` header");
        std::istringstream body(line);
        int lit;
        while (body >> lit) {
            if (lit == 0) {
                if (pending.size() != 3) parse_fail(no, "clauses must have exactly 3 literals");
                Clause cl;
                std::copy(pending.begin(), pending.end(), cl.lits.begin());
                f.clauses.push_back(cl);
                pending.clear();
            } else {
                if (std::abs(lit) > vars) parse_fail(no, "literal out of range");
                pending.push_back(lit);
            }
        }
    }
    if (vars < 0) throw InputError("missing `p cnf` header");
    if (!pending.empty()) throw InputError("unterminated clause at end of input");
    if (clauses != static_cast<int>(f.clauses.size()))
        throw InputError("header announced " + std::to_string(clauses) + " clauses, found " +
                         std::to_string(f.clauses.size()));
    f.num_vars = vars;
    return f;
}

CnfFormula read_dimacs_cnf_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_dimacs_cnf(in);
}

std::string content_digest(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string file_digest(const std::string& path) {
    auto in = open_or_throw(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return content_digest(ss.str());
}

}  // namespace ijdom
