#include "sqfiber/link.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace sqfiber {

std::string vertex_label(const Alphabet& alphabet, LinkVertex v) {
  return alphabet.name(generator_of(v)) + (is_end_end(v) ? "+" : "-");
}

CornerEdge corner_edge(const Square& s, int corner) {
  const auto& w = s.boundary;
  const Letter before = w[static_cast<std::size_t>((corner + 3) % 4)];
  const Letter after = w[static_cast<std::size_t>(corner)];
  return {{s.id, corner}, arrival(before), departure(after)};
}

LinkGraph build_link(const SquareComplex& c) {
  LinkGraph g;
  g.vertex_count = 2 * c.alphabet.size();
  g.incident.resize(g.vertex_count);
  for (const auto& s : c.squares) {
    for (int k = 0; k < 4; ++k) {
      const std::size_t idx = g.edges.size();
      g.edges.push_back(corner_edge(s, k));
      const auto& e = g.edges.back();
      g.incident[e.u].push_back(idx);
      if (e.v != e.u) g.incident[e.v].push_back(idx);
    }
  }
  return g;
}

namespace {

// BFS distance from `from` to `to` without using edge `skip`.
std::optional<std::size_t> distance_avoiding(const LinkGraph& g, LinkVertex from, LinkVertex to, std::size_t skip) {
  std::vector<std::size_t> dist(g.vertex_count, SIZE_MAX);
  std::deque<LinkVertex> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const LinkVertex x = queue.front();
    queue.pop_front();
    if (x == to) return dist[x];
    for (std::size_t ei : g.incident[x]) {
      if (ei == skip) continue;
      const LinkVertex y = g.edges[ei].other(x);
      if (dist[y] == SIZE_MAX) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> shortest_cycle_through(const LinkGraph& link, std::size_t edge_index) {
  const auto& e = link.edges.at(edge_index);
  if (e.u == e.v) return 1;
  auto d = distance_avoiding(link, e.u, e.v, edge_index);
  if (!d) return std::nullopt;
  return *d + 1;
}

LargenessReport largeness(const LinkGraph& link) {
  LargenessReport r;
  const auto& E = link.edges;
  for (const auto& e : E)
    if (e.u == e.v) r.violations.push_back({Violation::Kind::Loop, {e.at}, {e.u}});
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = i + 1; j < E.size(); ++j) {
      if (E[i].u == E[i].v || E[j].u == E[j].v) continue;
      const bool parallel = (E[i].u == E[j].u && E[i].v == E[j].v) || (E[i].u == E[j].v && E[i].v == E[j].u);
      if (parallel)
        r.violations.push_back({Violation::Kind::Bigon, {E[i].at, E[j].at}, {std::min(E[i].u, E[i].v), std::max(E[i].u, E[i].v)}});
    }
  // Triangles: three distinct vertices a < b < c pairwise joined; every
  // choice of parallel edges is its own violation.
  auto between = [&](LinkVertex a, LinkVertex b) {
    std::vector<std::size_t> out;
    for (std::size_t ei : link.incident[a])
      if (E[ei].other(a) == b && a != b) out.push_back(ei);
    return out;
  };
  for (LinkVertex a = 0; a < link.vertex_count; ++a)
    for (LinkVertex b = a + 1; b < link.vertex_count; ++b) {
      const auto ab = between(a, b);
      if (ab.empty()) continue;
      for (LinkVertex c = b + 1; c < link.vertex_count; ++c) {
        const auto bc = between(b, c);
        if (bc.empty()) continue;
        const auto ca = between(c, a);
        for (auto x : ab)
          for (auto y : bc)
            for (auto z : ca) r.violations.push_back({Violation::Kind::Triangle, {E[x].at, E[y].at, E[z].at}, {a, b, c}});
      }
    }
  r.is_large = r.violations.empty();

  for (std::size_t i = 0; i < E.size(); ++i) {
    auto len = shortest_cycle_through(link, i);
    if (len && (!r.girth || *len < *r.girth)) r.girth = len;
  }
  return r;
}

std::vector<bool> on_four_cycle(const LinkGraph& link) {
  const auto& E = link.edges;
  std::vector<std::vector<bool>> adjacent(link.vertex_count, std::vector<bool>(link.vertex_count, false));
  for (const auto& e : E)
    if (e.u != e.v) adjacent[e.u][e.v] = adjacent[e.v][e.u] = true;
  std::vector<bool> out(E.size(), false);
  for (std::size_t i = 0; i < E.size(); ++i) {
    const LinkVertex u = E[i].u, v = E[i].v;
    if (u == v) continue;
    // u - v - w - x - u with all four distinct
    for (LinkVertex w = 0; w < link.vertex_count && !out[i]; ++w) {
      if (w == u || w == v || !adjacent[v][w]) continue;
      for (LinkVertex x = 0; x < link.vertex_count; ++x) {
        if (x == u || x == v || x == w) continue;
        if (adjacent[w][x] && adjacent[x][u]) {
          out[i] = true;
          break;
        }
      }
    }
  }
  return out;
}

std::vector<CornerEdge> poison_corners(const LinkGraph& link) {
  const auto on4 = on_four_cycle(link);
  std::vector<CornerEdge> out;
  for (std::size_t i = 0; i < link.edges.size(); ++i)
    if (!on4[i]) out.push_back(link.edges[i]);
  return out;
}

std::vector<CornerEdge> poison_corners(const SquareComplex& c) { return poison_corners(build_link(c)); }

std::string export_dot(const LinkGraph& link, const SquareComplex& c, const DotHighlight& highlight) {
  std::ostringstream out;
  out << "graph link {\n";
  out << "  node [shape=circle];\n";
  for (LinkVertex v = 0; v < link.vertex_count; ++v) {
    out << "  \"" << vertex_label(c.alphabet, v) << "\"";
    if (highlight.vertices.count(v)) out << " [style=bold, penwidth=2]";
    out << ";\n";
  }
  for (std::size_t i = 0; i < link.edges.size(); ++i) {
    const auto& e = link.edges[i];
    std::vector<std::string> attrs;
    attrs.push_back("label=\"s" + std::to_string(e.at.square) + "c" + std::to_string(e.at.corner) + "\"");
    if (highlight.edges.count(i)) attrs.push_back("style=bold, penwidth=3");
    else if (!conjugating_generator(c.squares.at(e.at.square))) attrs.push_back("style=dashed");
    if (!conjugating_generator(c.squares.at(e.at.square))) attrs.push_back("color=blue");
    out << "  \"" << vertex_label(c.alphabet, e.u) << "\" -- \"" << vertex_label(c.alphabet, e.v) << "\" [";
    for (std::size_t k = 0; k < attrs.size(); ++k) out << (k ? ", " : "") << attrs[k];
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sqfiber
