#ifndef IJDOM_CHORDS_HPP
#define IJDOM_CHORDS_HPP

#include <string>
#include <vector>

#include "ijdom/graph.hpp"

namespace ijdom {

/// One chord of a circle, as two distinct positions in [0, 2N).
struct Chord {
    std::string label;
    int p = 0;
    int q = 0;
};

/// Chord diagram on 2N distinct positions for N chords. Chord i of the
/// diagram corresponds to vertex i+1 of the derived intersection graph.
struct ChordDiagram {
    std::vector<Chord> chords;

    int size() const { return static_cast<int>(chords.size()); }
    int positions() const { return 2 * size(); }
};

/// Throws InputError when positions collide or fall outside [0, 2N).
void validate_diagram(const ChordDiagram& d);

/// Intersection graph of the chords. Adjacency is computed twice: from
/// the crossing relation (exactly one endpoint of one chord strictly
/// between the endpoints of the other) and from the cut-open interval
/// model (overlap without containment). The two derivations must agree.
Graph chords_to_graph(const ChordDiagram& d);

}  // namespace ijdom

#endif
