#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ijdom/errors.hpp"
#include "ijdom/io.hpp"
#include "ijdom/report.hpp"

using namespace ijdom;

TEST_CASE("interval files: comments, blanks, errors with line numbers") {
    std::istringstream ok("# a path\n1 3\n\n2 5\n4 6  # trailing comment ignored\n");
    auto v = read_intervals(ok);
    REQUIRE(v.size() == 3);
    CHECK(v[1] == std::pair<double, double>{2, 5});

    std::istringstream bad("1 3\n5 4\n");
    CHECK_THROWS_WITH_AS(read_intervals(bad),
                         "parse error at line 2: degenerate interval: left must be < right",
                         InputError);
    std::istringstream junk("1 3\nxyz 4\n");
    CHECK_THROWS_AS(read_intervals(junk), InputError);
}

TEST_CASE("edge list round trip") {
    std::istringstream in("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
    Graph g = read_edge_list(in);
    CHECK(g.order() == 3);
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 3));
    CHECK_FALSE(g.adjacent(1, 3));

    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream again(out.str());
    Graph h = read_edge_list(again);
    CHECK(h.order() == g.order());
    CHECK(h.edge_count() == g.edge_count());

    std::istringstream wrong("p edge 3 5\ne 1 2\n");
    CHECK_THROWS_AS(read_edge_list(wrong), InputError);
    std::istringstream oob("p edge 2 1\ne 1 5\n");
    CHECK_THROWS_AS(read_edge_list(oob), InputError);
}

TEST_CASE("chord files round trip") {
    std::istringstream in("# k = 7\nc 2\nh a 0 2\nh b 1 3\n");
    ChordDiagram d = read_chords(in);
    REQUIRE(d.size() == 2);
    CHECK(d.chords[0].label == "a");

    std::ostringstream out;
    write_chords(out, d, {"k = 7"});
    std::istringstream again(out.str());
    ChordDiagram e = read_chords(again);
    CHECK(e.size() == 2);
    CHECK(e.chords[1].p == 1);

    std::istringstream dup("c 2\nh a 0 2\nh b 2 3\n");
    CHECK_THROWS_AS(read_chords(dup), InputError);
    std::istringstream count("c 3\nh a 0 2\nh b 1 3\n");
    CHECK_THROWS_AS(read_chords(count), InputError);
}

TEST_CASE("dimacs cnf") {
    std::istringstream in("c tiny\np cnf 4 2\n1 -2 3 0\n-1 2 4 0\n");
    CnfFormula f = read_dimacs_cnf(in);
    CHECK(f.num_vars == 4);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0].lits[1] == -2);

    std::istringstream two("p cnf 3 1\n1 2 0\n");
    CHECK_THROWS_AS(read_dimacs_cnf(two), InputError);
    std::istringstream open("p cnf 3 1\n1 2 3\n");
    CHECK_THROWS_AS(read_dimacs_cnf(open), InputError);
}

TEST_CASE("report text and json round trips") {
    RunReport r;
    r.add("command", "solve");
    r.add("gamma12", 3);
    r.add("agree", true);
    CHECK(RunReport::parse_text(r.text()) == r);
    CHECK(RunReport::parse_json(r.json()) == r);
}

TEST_CASE("digest is stable") {
    CHECK(content_digest("abc") == content_digest("abc"));
    CHECK(content_digest("abc") != content_digest("abd"));
    CHECK(content_digest("abc").size() == 16);
}
