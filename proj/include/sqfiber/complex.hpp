#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqfiber/words.hpp"

namespace sqfiber {

// A square 2-cell attached along a length-4 boundary word. Corner k sits at
// the start of letter k (so corner 0 lies between the last and first letter).
struct Square {
  Word boundary;
  std::size_t id = 0;

  friend bool operator==(const Square&, const Square&) = default;
};

// Single-vertex complex: one 1-cell per generator, one 2-cell per square.
struct SquareComplex {
  Alphabet alphabet;
  std::vector<Square> squares;
  std::vector<std::string> provenance;  // build trail, one entry per line

  friend bool operator==(const SquareComplex&, const SquareComplex&) = default;
};

struct LogEdge {
  std::string label, from, to;
};

// Labeled oriented graph: vertices are generator labels, an edge
// (label a, from u, to v) stands for the relation a v a^-1 = u.
struct LogSpec {
  std::vector<std::string> vertices;
  std::vector<LogEdge> edges;
};

enum class LogShape { Tree, Forest, General };

LogShape log_shape(const LogSpec& log);
std::string_view to_string(LogShape shape);

// Boundary "a v a^-1 u^-1" of the square for a LOG edge.
Word log_edge_relator(const LogEdge& e, const Alphabet& alphabet);
SquareComplex expand_log(const LogSpec& log);

// Checks length 4 and cyclic reducedness; throws InputError otherwise.
void validate_boundary(const Word& w, const Alphabet& alphabet);

// Text format, one statement per line, '#' starts a comment:
//   generators <name>+
//   edge label=<g> from=<g> to=<g>
//   square <letter> <letter> <letter> <letter>
//   name <free text>
SquareComplex parse_spec(std::string_view text);
std::string render(const SquareComplex& c);

SquareComplex build_lot_family(int k, std::string_view stem);
SquareComplex build_named(std::string_view name);
std::vector<std::string> named_complexes();

SquareComplex combine(const SquareComplex& c1, const SquareComplex& c2, std::string_view relator);
SquareComplex add_square(const SquareComplex& c, const Word& relator);
SquareComplex add_square(const SquareComplex& c, std::string_view relator);

// Pairs (earlier id, later id) of squares with identical boundary words.
std::vector<std::pair<std::size_t, std::size_t>> duplicate_squares(const SquareComplex& c);

// The generator occurring twice in a conjugation square (x y x^-1 z^-1 up to
// rotation), if any.
std::optional<std::uint32_t> conjugating_generator(const Square& s);

}  // namespace sqfiber
