#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sqfiber/complex.hpp"

namespace sqfiber {

// Link vertex: one end of a generator's 1-cell at the unique vertex.
// Index 2g is (g, start), written g-; index 2g+1 is (g, end), written g+.
using LinkVertex = std::size_t;

inline LinkVertex start_end(std::uint32_t gen) { return 2 * std::size_t{gen}; }
inline LinkVertex end_end(std::uint32_t gen) { return 2 * std::size_t{gen} + 1; }
inline std::uint32_t generator_of(LinkVertex v) { return static_cast<std::uint32_t>(v / 2); }
inline bool is_end_end(LinkVertex v) { return v % 2 == 1; }

// Direction along which a letter enters / leaves the vertex.
inline LinkVertex arrival(Letter l) { return l.sign > 0 ? end_end(l.gen) : start_end(l.gen); }
inline LinkVertex departure(Letter l) { return l.sign > 0 ? start_end(l.gen) : end_end(l.gen); }

std::string vertex_label(const Alphabet& alphabet, LinkVertex v);

struct CornerRef {
  std::size_t square = 0;
  int corner = 0;  // 0..3, corner k precedes boundary letter k

  friend bool operator==(const CornerRef&, const CornerRef&) = default;
  friend auto operator<=>(const CornerRef&, const CornerRef&) = default;
};

struct CornerEdge {
  CornerRef at;
  LinkVertex u = 0, v = 0;  // u = arrival of the letter before the corner, v = departure of the next

  LinkVertex other(LinkVertex x) const { return x == u ? v : u; }
};

// Endpoints of the link edge of one corner.
CornerEdge corner_edge(const Square& s, int corner);

struct LinkGraph {
  std::size_t vertex_count = 0;
  std::vector<CornerEdge> edges;  // edge index = 4 * square + corner
  std::vector<std::vector<std::size_t>> incident;  // vertex -> edge indices

  const CornerEdge& edge(CornerRef c) const { return edges.at(4 * c.square + static_cast<std::size_t>(c.corner)); }
};

LinkGraph build_link(const SquareComplex& c);

struct Violation {
  enum class Kind { Loop, Bigon, Triangle } kind;
  std::vector<CornerRef> corners;
  std::vector<LinkVertex> vertices;
};

struct LargenessReport {
  bool is_large = true;
  std::vector<Violation> violations;
  std::optional<std::size_t> girth;  // nullopt = acyclic
};

LargenessReport largeness(const LinkGraph& link);

// Length of the shortest cycle using the given edge, or nullopt.
std::optional<std::size_t> shortest_cycle_through(const LinkGraph& link, std::size_t edge_index);

// Edge indices lying on at least one cycle of length 4 with 4 distinct
// vertices (parallel edges allowed, loops never).
std::vector<bool> on_four_cycle(const LinkGraph& link);

// Corners whose link edge lies on no 4-cycle, in square/corner order.
std::vector<CornerEdge> poison_corners(const SquareComplex& c);
std::vector<CornerEdge> poison_corners(const LinkGraph& link);

struct DotHighlight {
  std::set<LinkVertex> vertices;
  std::set<std::size_t> edges;
};

// Undirected DOT rendering. Highlighted elements are bold; edges from
// squares that are not conjugation relators are drawn dashed in blue.
std::string export_dot(const LinkGraph& link, const SquareComplex& c, const DotHighlight& highlight = {});

}  // namespace sqfiber
