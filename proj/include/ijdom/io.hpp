#ifndef IJDOM_IO_HPP
#define IJDOM_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ijdom/chords.hpp"
#include "ijdom/interval_graph.hpp"
#include "ijdom/reduction.hpp"
#include "ijdom/reduction_types.hpp"

namespace ijdom {

// Interval files: one `left right` pair per line, '#' comments and blank
// lines ignored. Edge lists: DIMACS-like `p edge n m` header then
// `e u v` lines (1-based). Chord diagrams: `c N` header then
// `h label p q` lines with positions in [0, 2N); '#' comments allowed.
// All parse errors carry the 1-based line number.

std::vector<std::pair<double, double>> read_intervals(std::istream& in);
std::vector<std::pair<double, double>> read_intervals_file(const std::string& path);
void write_intervals(std::ostream& out, const IntervalSet& s);

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

ChordDiagram read_chords(std::istream& in);
ChordDiagram read_chords_file(const std::string& path);
void write_chords(std::ostream& out, const ChordDiagram& d,
                  const std::vector<std::string>& header_comments = {});

/// Sidecar next to a gadget diagram: `label <chord-id> <role>` lines.
void write_label_map(std::ostream& out, const GadgetInstance& inst);

CnfFormula read_dimacs_cnf(std::istream& in);
CnfFormula read_dimacs_cnf_file(const std::string& path);

/// FNV-1a 64 over the raw bytes, as 16 hex digits (run reports).
std::string content_digest(const std::string& bytes);
std::string file_digest(const std::string& path);

}  // namespace ijdom

#endif
