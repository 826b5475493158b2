#include "sqfiber/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sqfiber {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

void push_square(SquareComplex& c, Word boundary, bool note_duplicate = false) {
  validate_boundary(boundary, c.alphabet);
  const std::size_t id = c.squares.size();
  for (const Square& s : c.squares) {
    if (note_duplicate && s.boundary == boundary) {
      c.provenance.push_back("square " + std::to_string(id) + " duplicates square " + std::to_string(s.id));
      break;
    }
  }
  c.squares.push_back({std::move(boundary), id});
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

LogShape log_shape(const LogSpec& log) {
  std::vector<std::size_t> parent(log.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto idx = [&](const std::string& n) {
    return static_cast<std::size_t>(std::find(log.vertices.begin(), log.vertices.end(), n) - log.vertices.begin());
  };
  std::size_t components = log.vertices.size();
  for (const auto& e : log.edges) {
    const auto a = find_root(parent, idx(e.from)), b = find_root(parent, idx(e.to));
    if (a == b) return LogShape::General;
    parent[a] = b;
    --components;
  }
  return components <= 1 ? LogShape::Tree : LogShape::Forest;
}

std::string_view to_string(LogShape shape) {
  switch (shape) {
    case LogShape::Tree: return "tree";
    case LogShape::Forest: return "forest";
    case LogShape::General: return "graph";
  }
  return "graph";
}

Word log_edge_relator(const LogEdge& e, const Alphabet& alphabet) {
  const auto a = static_cast<std::uint32_t>(alphabet.index_of(e.label));
  const auto u = static_cast<std::uint32_t>(alphabet.index_of(e.from));
  const auto v = static_cast<std::uint32_t>(alphabet.index_of(e.to));
  return Word{{a, 1}, {v, 1}, {a, -1}, {u, -1}};
}

SquareComplex expand_log(const LogSpec& log) {
  SquareComplex c;
  for (const auto& v : log.vertices) c.alphabet.add(v);
  for (const auto& e : log.edges) push_square(c, log_edge_relator(e, c.alphabet));
  if (!log.edges.empty())
    c.provenance.push_back("LOG with " + std::to_string(log.edges.size()) + " edges: " +
                           std::string(to_string(log_shape(log))));
  return c;
}

void validate_boundary(const Word& w, const Alphabet& alphabet) {
  if (w.size() != 4)
    throw InputError("square boundary must have 4 letters, got " + std::to_string(w.size()));
  for (const Letter& l : w)
    if (l.gen >= alphabet.size()) throw AlphabetMismatch("square letter outside the alphabet");
  if (!w.is_cyclically_reduced())
    throw InputError("square boundary '" + format_word(w, alphabet) + "' is not cyclically reduced");
}

SquareComplex parse_spec(std::string_view text) {
  SquareComplex c;
  LogSpec log;
  std::vector<std::string> pending_squares;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw InputError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    std::string rest = trim(line.substr(keyword.size()));
    if (keyword == "generators") {
      std::istringstream names(rest);
      std::string n;
      while (names >> n) {
        if (std::find(log.vertices.begin(), log.vertices.end(), n) != log.vertices.end())
          fail("duplicate vertex label '" + n + "'");
        if (!Alphabet::valid_name(n)) fail("malformed generator name '" + n + "'");
        log.vertices.push_back(n);
      }
    } else if (keyword == "edge") {
      LogEdge e;
      std::istringstream fields(rest);
      std::string kv;
      while (fields >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) fail("expected key=value in edge statement, got '" + kv + "'");
        const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        if (key == "label") e.label = value;
        else if (key == "from") e.from = value;
        else if (key == "to") e.to = value;
        else fail("unknown edge field '" + key + "'");
      }
      for (const std::string* v : {&e.label, &e.from, &e.to}) {
        if (v->empty()) fail("edge statement needs label, from and to");
        if (std::find(log.vertices.begin(), log.vertices.end(), *v) == log.vertices.end())
          fail("edge refers to undeclared vertex '" + *v + "'");
      }
      log.edges.push_back(std::move(e));
    } else if (keyword == "square") {
      pending_squares.push_back(rest);
    } else if (keyword == "name") {
      c.provenance.push_back(rest);
    } else {
      fail("unknown statement '" + keyword + "'");
    }
  }

  SquareComplex expanded = expand_log(log);
  expanded.provenance.insert(expanded.provenance.begin(), c.provenance.begin(), c.provenance.end());
  for (const auto& sq : pending_squares) push_square(expanded, parse_word(sq, expanded.alphabet));
  return expanded;
}

std::string render(const SquareComplex& c) {
  std::ostringstream out;
  for (const auto& p : c.provenance) out << "name " << p << '\n';
  out << "generators";
  for (const auto& n : c.alphabet.names()) out << ' ' << n;
  out << '\n';
  for (const auto& s : c.squares) out << "square " << format_word(s.boundary, c.alphabet) << '\n';
  return out.str();
}

SquareComplex build_lot_family(int k, std::string_view stem) {
  if (k < 4) throw Unsupported("LOT family is defined for k >= 4, got " + std::to_string(k));
  if (!Alphabet::valid_name(stem) || Alphabet::stem(stem).size() != stem.size())
    throw InputError("family stem must be alphabetic, got '" + std::string(stem) + "'");
  auto name = [&](int i) { return std::string(stem) + std::to_string(i); };
  LogSpec log;
  for (int i = 0; i <= k; ++i) log.vertices.push_back(name(i));
  // a_k = a_{i+1} a_i a_{i+1}^-1 for i = 0..k-2, and a_{k-1} = a_0 a_k a_0^-1.
  for (int i = 0; i + 1 < k; ++i) log.edges.push_back({name(i + 1), name(k), name(i)});
  log.edges.push_back({name(0), name(k - 1), name(k)});
  SquareComplex c = expand_log(log);
  c.provenance.insert(c.provenance.begin(), "lot k=" + std::to_string(k) + " stem=" + std::string(stem));
  return c;
}

std::vector<std::string> named_complexes() { return {"lot-a", "lot-b", "g1", "gf", "g2", "torus"}; }

SquareComplex build_named(std::string_view name) {
  auto tagged = [&](SquareComplex c) {
    c.provenance.insert(c.provenance.begin(), "named " + std::string(name));
    return c;
  };
  if (name == "lot-a") return tagged(build_lot_family(4, "a"));
  if (name == "lot-b") return tagged(build_lot_family(4, "b"));
  if (name == "g1")
    return tagged(combine(build_lot_family(4, "a"), build_lot_family(4, "b"), "a0 b2 a1^-1 b0^-1"));
  if (name == "gf" || name == "g2") {
    SquareComplex c;
    for (const char* g : {"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"}) c.alphabet.add(g);
    for (const char* r : {"b2 a1 b2^-1 a4^-1", "b3 a2 b3^-1 a4^-1", "b1 a4 b1^-1 a3^-1",
                          "a2 b1 a2^-1 b4^-1", "a3 b2 a3^-1 b4^-1", "a1 b4 a1^-1 b3^-1"})
      push_square(c, parse_word(r, c.alphabet));
    if (name == "g2") c = add_square(c, "a4 b1 a1^-1 b4^-1");
    return tagged(std::move(c));
  }
  if (name == "torus") {
    SquareComplex c;
    c.alphabet.add("a");
    c.alphabet.add("b");
    push_square(c, parse_word("a b a^-1 b^-1", c.alphabet));
    return tagged(std::move(c));
  }
  throw InputError("unknown named complex '" + std::string(name) + "'");
}

SquareComplex combine(const SquareComplex& c1, const SquareComplex& c2, std::string_view relator) {
  SquareComplex out;
  for (const auto& n : c1.alphabet.names()) out.alphabet.add(n);
  for (const auto& n : c2.alphabet.names()) {
    if (out.alphabet.find(n)) throw InputError("alphabet collision on generator '" + n + "'");
    out.alphabet.add(n);
  }
  const auto offset = static_cast<std::uint32_t>(c1.alphabet.size());
  for (const auto& s : c1.squares) push_square(out, s.boundary);
  for (const auto& s : c2.squares) {
    Word shifted = s.boundary;
    for (Letter& l : shifted.letters()) l.gen += offset;
    push_square(out, std::move(shifted));
  }
  for (const auto& p : c1.provenance) out.provenance.push_back("left: " + p);
  for (const auto& p : c2.provenance) out.provenance.push_back("right: " + p);
  Word r = parse_word(relator, out.alphabet);
  push_square(out, r, true);
  out.provenance.push_back("combine relator " + format_word(r, out.alphabet));
  return out;
}

SquareComplex add_square(const SquareComplex& c, const Word& relator) {
  SquareComplex out = c;
  push_square(out, relator, true);
  out.provenance.push_back("add-square " + format_word(relator, out.alphabet));
  return out;
}

SquareComplex add_square(const SquareComplex& c, std::string_view relator) {
  return add_square(c, parse_word(relator, c.alphabet));
}

std::vector<std::pair<std::size_t, std::size_t>> duplicate_squares(const SquareComplex& c) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < c.squares.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (c.squares[i].boundary == c.squares[j].boundary) {
        out.emplace_back(i, j);
        break;
      }
  return out;
}

std::optional<std::uint32_t> conjugating_generator(const Square& s) {
  const auto& w = s.boundary;
  for (std::size_t k = 0; k < 2; ++k)
    if (w[k].gen == w[k + 2].gen && w[k].sign == -w[k + 2].sign) return w[k].gen;
  return std::nullopt;
}

}  // namespace sqfiber
