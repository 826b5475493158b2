#include "sqfiber/morse.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace sqfiber {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  std::size_t components;
  explicit UnionFind(std::size_t n) : parent(n), components(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // false when x and y were already connected
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    --components;
    return true;
  }
};

Weight abs_weight(Weight w) { return w < 0 ? -w : w; }

}  // namespace

WeightSystem WeightSystem::parse(std::string_view spec, const Alphabet& alphabet) {
  std::vector<std::optional<Weight>> by_stem(alphabet.size()), by_name(alphabet.size());
  std::string text(spec);
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream in(text);
  std::string item;
  while (in >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw InputError("weight assignment must look like name=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    Weight value = 0;
    try {
      std::size_t used = 0;
      value = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("weight for '" + key + "' is not an integer");
    }
    bool matched = false;
    if (auto g = alphabet.find(key)) {
      by_name[*g] = value;
      matched = true;
    }
    if (Alphabet::stem(key).size() == key.size()) {
      for (std::size_t g = 0; g < alphabet.size(); ++g)
        if (Alphabet::stem(alphabet.name(g)) == key) {
          by_stem[g] = value;
          matched = true;
        }
    }
    if (!matched) throw AlphabetMismatch("weight key '" + key + "' matches no generator");
  }
  std::vector<Weight> out(alphabet.size());
  for (std::size_t g = 0; g < alphabet.size(); ++g) {
    if (by_name[g]) out[g] = *by_name[g];
    else if (by_stem[g]) out[g] = *by_stem[g];
    else throw InputError("no weight given for generator '" + alphabet.name(g) + "'");
  }
  return WeightSystem(std::move(out));
}

WeightSystem WeightSystem::negated() const {
  std::vector<Weight> out(weights_);
  for (auto& w : out) w = -w;
  return WeightSystem(std::move(out));
}

WeightSystem WeightSystem::signs() const {
  std::vector<Weight> out(weights_);
  for (auto& w : out) w = (w > 0) - (w < 0);
  return WeightSystem(std::move(out));
}

bool WeightSystem::all_unit() const {
  return std::all_of(weights_.begin(), weights_.end(), [](Weight w) { return w == 1 || w == -1; });
}

std::string WeightSystem::to_string(const Alphabet& alphabet) const {
  std::string out;
  for (std::size_t g = 0; g < weights_.size(); ++g) {
    if (g) out += ',';
    out += alphabet.name(g) + "=" + std::to_string(weights_[g]);
  }
  return out;
}

AdmissibilityReport check_admissible(const SquareComplex& c, const WeightSystem& ws) {
  if (ws.size() != c.alphabet.size())
    throw AlphabetMismatch("weight system has " + std::to_string(ws.size()) + " entries for " +
                           std::to_string(c.alphabet.size()) + " generators");
  AdmissibilityReport r;
  for (std::size_t g = 0; g < ws.size(); ++g)
    if (ws[g] == 0) r.zero_weight.push_back(g);
  std::vector<CornerHeights> heights;
  for (const auto& s : c.squares) {
    std::array<Weight, 4> step{};
    for (std::size_t k = 0; k < 4; ++k) step[k] = s.boundary[k].sign * ws[s.boundary[k].gen];
    if (step[0] + step[1] + step[2] + step[3] != 0) {
      r.nonzero_sum.push_back(s.id);
      continue;
    }
    if (step[0] != -step[2] || step[1] != -step[3]) {
      r.affine_violations.push_back(s.id);
      continue;
    }
    CornerHeights ch;
    for (std::size_t k = 1; k < 4; ++k) ch.h[k] = ch.h[k - 1] + step[k - 1];
    ch.min_corner = static_cast<int>(std::min_element(ch.h.begin(), ch.h.end()) - ch.h.begin());
    ch.max_corner = static_cast<int>(std::max_element(ch.h.begin(), ch.h.end()) - ch.h.begin());
    heights.push_back(ch);
  }
  r.admissible = r.zero_weight.empty() && r.nonzero_sum.empty() && r.affine_violations.empty();
  if (r.admissible) {
    for (const auto& ch : heights) {
      const auto lo = ch.h[static_cast<std::size_t>(ch.min_corner)];
      const auto hi = ch.h[static_cast<std::size_t>(ch.max_corner)];
      if (std::count(ch.h.begin(), ch.h.end(), lo) != 1 || std::count(ch.h.begin(), ch.h.end(), hi) != 1 ||
          (ch.max_corner - ch.min_corner + 4) % 4 != 2)
        throw InvariantViolation("admissible square without unique opposite min/max corners");
    }
    r.heights = std::move(heights);
  }
  return r;
}

WeightSystem LatticeBasis::combination(std::span<const Weight> coords) const {
  if (coords.size() != basis.size()) throw InputError("coordinate count does not match lattice rank");
  const std::size_t n = basis.empty() ? 0 : basis.front().size();
  std::vector<Weight> w(n, 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t g = 0; g < n; ++g) w[g] += coords[i] * basis[i][g];
  return WeightSystem(std::move(w));
}

namespace {

// Integer row reduction of `rows` to echelon form over the first `cols`
// columns, using only unimodular row operations.
void integer_echelon(std::vector<std::vector<Weight>>& rows, std::size_t cols, std::size_t& rank) {
  rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    for (;;) {
      // smallest nonzero |entry| at or below `rank` becomes the pivot
      std::size_t best = rows.size();
      for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (best == rows.size() || abs_weight(rows[r][col]) < abs_weight(rows[best][col])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[rank], rows[best]);
      bool done = true;
      for (std::size_t r = rank + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        const Weight q = rows[r][col] / rows[rank][col];
        for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] -= q * rows[rank][k];
        if (rows[r][col] != 0) done = false;
      }
      if (done) {
        ++rank;
        break;
      }
    }
  }
}

// Hermite normal form of a full-rank set of row vectors.
std::vector<std::vector<Weight>> hermite_rows(std::vector<std::vector<Weight>> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t rank = 0;
  integer_echelon(rows, n, rank);
  rows.resize(rank);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto pivot = static_cast<std::size_t>(
        std::find_if(rows[i].begin(), rows[i].end(), [](Weight x) { return x != 0; }) - rows[i].begin());
    if (rows[i][pivot] < 0)
      for (auto& x : rows[i]) x = -x;
    for (std::size_t j = 0; j < i; ++j) {
      Weight q = rows[j][pivot] / rows[i][pivot];
      if (rows[j][pivot] - q * rows[i][pivot] < 0) --q;
      for (std::size_t k = 0; k < n; ++k) rows[j][k] -= q * rows[i][k];
    }
  }
  return rows;
}

}  // namespace

LatticeBasis weight_lattice(const SquareComplex& c) {
  const std::size_t n = c.alphabet.size(), m = c.squares.size();
  // [A^T | I]: row g holds the signed count of g in each square, then e_g.
  std::vector<std::vector<Weight>> rows(n, std::vector<Weight>(m + n, 0));
  for (const auto& s : c.squares)
    for (const Letter& l : s.boundary) rows[l.gen][s.id] += l.sign;
  for (std::size_t g = 0; g < n; ++g) rows[g][m + g] = 1;
  std::size_t rank = 0;
  integer_echelon(rows, m, rank);
  std::vector<std::vector<Weight>> kernel;
  for (std::size_t r = rank; r < n; ++r) kernel.emplace_back(rows[r].begin() + static_cast<std::ptrdiff_t>(m), rows[r].end());
  LatticeBasis out;
  out.basis = hermite_rows(std::move(kernel));
  out.rank = out.basis.size();
  return out;
}

std::pair<DirectionalLink, DirectionalLink> directional_links(const SquareComplex& c, const WeightSystem& ws) {
  const auto adm = check_admissible(c, ws);
  if (!adm.admissible) throw PreconditionFailed("weight system is not admissible");
  DirectionalLink asc, desc;
  asc.side = LinkSide::Ascending;
  desc.side = LinkSide::Descending;
  std::vector<bool> ascending(2 * c.alphabet.size());
  for (std::uint32_t g = 0; g < c.alphabet.size(); ++g) {
    ascending[start_end(g)] = ws[g] > 0;
    ascending[end_end(g)] = ws[g] < 0;
  }
  for (LinkVertex v = 0; v < ascending.size(); ++v) (ascending[v] ? asc : desc).vertices.push_back(v);

  auto finish = [&](DirectionalLink& side, bool want_ascending) {
    std::vector<std::size_t> local(ascending.size(), SIZE_MAX);
    for (std::size_t i = 0; i < side.vertices.size(); ++i) local[side.vertices[i]] = i;
    UnionFind uf(side.vertices.size());
    bool acyclic = true;
    for (const auto& e : side.edges) {
      if (ascending[e.u] != want_ascending || ascending[e.v] != want_ascending)
        throw InvariantViolation("extremal corner joins directions on different sides");
      if (!uf.unite(local[e.u], local[e.v])) acyclic = false;
    }
    side.component_count = uf.components;
    side.is_tree = acyclic && uf.components == 1;
  };
  for (const auto& s : c.squares) {
    const auto& ch = adm.heights[s.id];
    asc.edges.push_back(corner_edge(s, ch.min_corner));
    desc.edges.push_back(corner_edge(s, ch.max_corner));
  }
  finish(asc, true);
  finish(desc, false);
  return {std::move(asc), std::move(desc)};
}

FiberGraph fiber_graph(const SquareComplex& c, const WeightSystem& ws) {
  const auto adm = check_admissible(c, ws);
  if (!adm.admissible) throw PreconditionFailed("weight system is not admissible");
  FiberGraph f;
  f.vertices.push_back({0, 0});
  std::vector<std::size_t> first_interior(c.alphabet.size());
  for (std::uint32_t g = 0; g < c.alphabet.size(); ++g) {
    first_interior[g] = f.vertices.size();
    for (Weight j = 1; j < abs_weight(ws[g]); ++j) f.vertices.push_back({g, j});
  }
  // Fiber point at `offset` above the start of rising letter `l`.
  auto point_on = [&](Letter l, Weight offset) -> std::size_t {
    const Weight len = abs_weight(ws[l.gen]);
    if (offset == 0 || offset == len) return 0;
    // g^+1 is traversed from g's start, g^-1 from its end
    const bool from_start = l.sign > 0;
    const Weight index = from_start ? offset : len - offset;
    return first_interior[l.gen] + static_cast<std::size_t>(index - 1);
  };
  for (const auto& s : c.squares) {
    const auto& ch = adm.heights[s.id];
    const auto lo = static_cast<std::size_t>(ch.min_corner);
    // Two rising paths from the min corner: forward along letters lo, lo+1 and
    // backward along the inverses of letters lo-1, lo-2.
    const std::array<Letter, 2> fwd{s.boundary[lo], s.boundary[(lo + 1) % 4]};
    const std::array<Letter, 2> bwd{s.boundary[(lo + 3) % 4].inverse(), s.boundary[(lo + 2) % 4].inverse()};
    auto locate = [&](const std::array<Letter, 2>& path, Weight level) {
      const Weight first = abs_weight(ws[path[0].gen]);
      if (level <= first) return point_on(path[0], level);
      return point_on(path[1], level - first);
    };
    for (Weight level = 1; level < ch.span(); ++level)
      f.edges.push_back({s.id, level, locate(fwd, level), locate(bwd, level)});
  }
  UnionFind uf(f.vertices.size());
  for (const auto& e : f.edges) uf.unite(e.from, e.to);
  f.component_count = uf.components;
  f.chi = static_cast<Weight>(f.vertices.size()) - static_cast<Weight>(f.edges.size());
  return f;
}

Weight fiber_chi_closed_form(const SquareComplex& c, const WeightSystem& ws) {
  const auto adm = check_admissible(c, ws);
  if (!adm.admissible) throw PreconditionFailed("weight system is not admissible");
  Weight chi = 1;
  for (std::size_t g = 0; g < ws.size(); ++g) chi += abs_weight(ws[g]) - 1;
  for (const auto& ch : adm.heights) chi -= ch.span() - 1;
  return chi;
}

Weight kernel_rank(const SquareComplex& c, const WeightSystem& ws) {
  if (!check_admissible(c, ws).admissible) throw PreconditionFailed("weight system is not admissible");
  const auto [asc, desc] = directional_links(c, ws);
  if (!asc.is_tree) throw PreconditionFailed("ascending link is not a tree");
  if (!desc.is_tree) throw PreconditionFailed("descending link is not a tree");
  const auto f = fiber_graph(c, ws);
  if (!f.connected()) throw PreconditionFailed("fiber graph is disconnected");
  return 1 - f.chi;
}

namespace {

Weight gcd_of(std::span<const Weight> xs) {
  Weight g = 0;
  for (Weight x : xs) g = std::gcd(g, abs_weight(x));
  return g;
}

// Calls fn for every vector in [-bound, bound]^dim in lexicographic order.
template <class Fn>
void for_each_box_point(std::size_t dim, int bound, Fn&& fn) {
  std::vector<Weight> v(dim, -bound);
  if (dim == 0) return;
  for (;;) {
    fn(v);
    std::size_t i = dim;
    while (i > 0 && v[i - 1] == bound) v[--i] = -bound;
    if (i == 0) return;
    ++v[i - 1];
  }
}

}  // namespace

FiberingTable fibering_scan(const SquareComplex& c, int bound) {
  if (bound < 1) throw InputError("scan bound must be at least 1");
  FiberingTable t;
  t.lattice = weight_lattice(c);
  for_each_box_point(t.lattice.rank, bound, [&](const std::vector<Weight>& coords) {
    FiberingRow row;
    row.coords = coords;
    row.weights = t.lattice.combination(coords);
    const auto w = row.weights.values();
    if (std::any_of(w.begin(), w.end(), [](Weight x) { return x == 0; })) return;
    row.primitive = gcd_of(coords) == 1;
    row.admissible = check_admissible(c, row.weights).admissible;
    if (row.admissible) {
      const auto [asc, desc] = directional_links(c, row.weights);
      row.asc_tree = asc.is_tree;
      row.desc_tree = desc.is_tree;
      const auto f = fiber_graph(c, row.weights);
      row.chi = f.chi;
      row.fiber_components = f.component_count;
      if (row.asc_tree && row.desc_tree && f.connected()) row.rank = 1 - f.chi;
    }
    t.rows.push_back(std::move(row));
  });
  return t;
}

FiberingVerdict infinite_fibering_verdict(const SquareComplex& c) {
  FiberingVerdict v;
  const auto lattice = weight_lattice(c);
  v.lattice_rank = lattice.rank;
  if (lattice.rank < 2) {
    v.reason = "weight lattice has rank " + std::to_string(lattice.rank) + " < 2";
    return v;
  }
  // Directional links only see the signs of the weights, so one admissible
  // representative per generator sign pattern decides a whole open cone.
  const int bound = lattice.rank <= 4 ? 2 : 1;
  // Smallest coordinates first, positive before negative, so the witness is
  // the simplest weight vector of its cone.
  std::vector<std::vector<Weight>> points;
  for_each_box_point(lattice.rank, bound, [&](const std::vector<Weight>& coords) { points.push_back(coords); });
  auto size = [](const std::vector<Weight>& x) {
    Weight m = 0;
    for (Weight e : x) m = std::max(m, e < 0 ? -e : e);
    return m;
  };
  std::stable_sort(points.begin(), points.end(), [&](const auto& a, const auto& b) {
    const Weight sa = size(a), sb = size(b);
    return sa != sb ? sa < sb : a > b;
  });
  std::vector<std::vector<Weight>> seen_patterns;
  for (const auto& coords : points) {
    const auto ws = lattice.combination(coords);
    const auto w = ws.values();
    if (std::any_of(w.begin(), w.end(), [](Weight x) { return x == 0; })) continue;
    const auto pattern = ws.signs();
    std::vector<Weight> key(pattern.values().begin(), pattern.values().end());
    if (std::find(seen_patterns.begin(), seen_patterns.end(), key) != seen_patterns.end()) continue;
    if (!check_admissible(c, ws).admissible) continue;
    seen_patterns.push_back(key);
    const auto [asc, desc] = directional_links(c, ws);
    if (asc.is_tree && desc.is_tree) {
      v.infinitely_many = true;
      v.witness = ws;
      for (Weight x : coords) v.orthant.push_back((x > 0) - (x < 0));
      v.reason = "ascending and descending links are trees throughout this sign pattern";
      break;
    }
  }
  if (!v.infinitely_many) v.reason = "no sign pattern of the lattice has tree ascending and descending links";
  return v;
}

}  // namespace sqfiber
