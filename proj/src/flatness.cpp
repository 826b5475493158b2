#include "sqfiber/flatness.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace sqfiber {

std::vector<std::size_t> eligible_squares(const SquareComplex& c) {
  std::vector<bool> poisoned(c.squares.size(), false);
  for (const auto& e : poison_corners(c)) poisoned[e.at.square] = true;
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < c.squares.size(); ++s)
    if (!poisoned[s]) out.push_back(s);
  return out;
}

std::vector<std::pair<int, int>> disk_cells(int radius) {
  std::vector<std::pair<int, int>> cells;
  if (radius < 1) return cells;
  cells.emplace_back(0, 0);
  // Ring d starts next to ring d-1 and walks counterclockwise, so every cell
  // after the seed touches an earlier one.
  for (int d = 1; d < radius; ++d) {
    for (int y = -d + 1; y <= d; ++y) cells.emplace_back(d, y);
    for (int x = d - 1; x >= -d; --x) cells.emplace_back(x, d);
    for (int y = d - 1; y >= -d; --y) cells.emplace_back(-d, y);
    for (int x = -d + 1; x <= d; ++x) cells.emplace_back(x, -d);
  }
  return cells;
}

namespace {

using Point = std::pair<int, int>;

// Counterclockwise corner positions of the unit cell at (x, y).
Point grid_point(int x, int y, int pos) {
  static constexpr std::array<std::array<int, 2>, 4> kOffset{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  return {x + kOffset[static_cast<std::size_t>(pos)][0], y + kOffset[static_cast<std::size_t>(pos)][1]};
}

int corner_position(const Placement& p, int corner) {
  return p.refl ? ((p.rot - corner) % 4 + 4) % 4 : (p.rot + corner) % 4;
}

// A grid edge as seen by the cell placed on it: generator and the grid point
// where the generator starts.
struct SideLabel {
  std::uint32_t gen = 0;
  Point start;
  friend bool operator==(const SideLabel&, const SideLabel&) = default;
};

// side 0 = bottom, 1 = right, 2 = top, 3 = left
std::array<SideLabel, 4> side_labels(const SquareComplex& c, const Placement& p) {
  std::array<SideLabel, 4> out{};
  const auto& w = c.squares[p.square].boundary;
  for (int k = 0; k < 4; ++k) {
    const int a = corner_position(p, k), b = corner_position(p, (k + 1) % 4);
    const int side = p.refl ? b : a;
    const Letter l = w[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(side)] = {l.gen, grid_point(p.x, p.y, l.sign > 0 ? a : b)};
  }
  return out;
}

// Direction-end at grid point q of the edge labelled `s`.
LinkVertex end_at(const SideLabel& s, Point q) { return s.start == q ? start_end(s.gen) : end_end(s.gen); }

class DiskSearch {
 public:
  DiskSearch(const SquareComplex& c, int radius, std::vector<std::size_t> eligible)
      : c_(c), radius_(radius), eligible_(std::move(eligible)), order_(disk_cells(radius)) {
    for (std::size_t i = 0; i < order_.size(); ++i) slot_[order_[i]] = i;
    placed_.resize(order_.size());
    labels_.resize(order_.size());
    filled_.assign(order_.size(), false);
  }

  std::optional<DiskWitness> run() {
    for (std::size_t s : eligible_) {
      Placement seed{0, 0, s, 0, false};
      if (place(0, seed) && extend(1)) return witness();
      filled_[0] = false;
    }
    return std::nullopt;
  }

 private:
  std::optional<std::size_t> slot_of(int x, int y) const {
    auto it = slot_.find({x, y});
    if (it == slot_.end() || !filled_[it->second]) return std::nullopt;
    return it->second;
  }

  bool place(std::size_t idx, const Placement& p) {
    const auto labels = side_labels(c_, p);
    const auto [x, y] = order_[idx];
    // neighbour cell offset, my side, their side
    static constexpr std::array<std::array<int, 4>, 4> kNeighbours{{{0, -1, 0, 2}, {1, 0, 1, 3}, {0, 1, 2, 0}, {-1, 0, 3, 1}}};
    for (const auto& n : kNeighbours) {
      if (auto j = slot_of(x + n[0], y + n[1]))
        if (!(labels[static_cast<std::size_t>(n[2])] == labels_[*j][static_cast<std::size_t>(n[3])])) return false;
    }
    placed_[idx] = p;
    labels_[idx] = labels;
    filled_[idx] = true;
    for (int pos = 0; pos < 4; ++pos) {
      const Point q = grid_point(x, y, pos);
      if (!vertex_ok(q)) {
        filled_[idx] = false;
        return false;
      }
    }
    return true;
  }

  // When all four cells around q are placed, the four edges at q must carry
  // four different direction-ends.
  bool vertex_ok(Point q) const {
    const auto [X, Y] = q;
    const auto ll = slot_of(X - 1, Y - 1), lr = slot_of(X, Y - 1), ur = slot_of(X, Y), ul = slot_of(X - 1, Y);
    if (!ll || !lr || !ur || !ul) return true;
    const std::array<LinkVertex, 4> ends{end_at(labels_[*lr][3], q), end_at(labels_[*ur][0], q),
                                         end_at(labels_[*ul][1], q), end_at(labels_[*ll][2], q)};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (ends[i] == ends[j]) return false;
    return true;
  }

  bool extend(std::size_t idx) {
    if (idx == order_.size()) return true;
    const auto [x, y] = order_[idx];
    for (std::size_t s : eligible_)
      for (int refl = 0; refl < 2; ++refl)
        for (int rot = 0; rot < 4; ++rot) {
          if (place(idx, {x, y, s, rot, refl == 1}) && extend(idx + 1)) return true;
          filled_[idx] = false;
        }
    return false;
  }

  DiskWitness witness() const { return {radius_, placed_}; }

  const SquareComplex& c_;
  int radius_;
  std::vector<std::size_t> eligible_;
  std::vector<std::pair<int, int>> order_;
  std::map<std::pair<int, int>, std::size_t> slot_;
  std::vector<Placement> placed_;
  std::vector<std::array<SideLabel, 4>> labels_;
  std::vector<bool> filled_;
};

}  // namespace

std::optional<DiskWitness> search_flat_disk(const SquareComplex& c, int radius) {
  if (radius < 1) throw InputError("disk radius must be at least 1");
  return DiskSearch(c, radius, eligible_squares(c)).run();
}

bool validate_disk(const SquareComplex& c, const DiskWitness& w, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::map<Point, const Placement*> at;
  for (const auto& p : w.cells) {
    if (p.square >= c.squares.size() || p.rot < 0 || p.rot > 3) return fail("placement out of range");
    if (!at.emplace(Point{p.x, p.y}, &p).second) return fail("cell placed twice");
  }
  const auto cells = disk_cells(w.radius);
  if (cells.size() != at.size()) return fail("witness does not cover the disk");
  for (const auto& cell : cells)
    if (!at.count(cell)) return fail("cell missing from witness");

  // Every boundary letter, written as (generator, start point, end point) on
  // the grid, must be the same from both cells sharing that grid edge.
  using Segment = std::pair<Point, Point>;
  std::map<Segment, std::pair<std::uint32_t, Point>> edge_letters;
  for (const auto& p : w.cells) {
    const auto& word = c.squares[p.square].boundary;
    for (int k = 0; k < 4; ++k) {
      const Point a = grid_point(p.x, p.y, corner_position(p, k));
      const Point b = grid_point(p.x, p.y, corner_position(p, (k + 1) % 4));
      const Letter l = word[static_cast<std::size_t>(k)];
      const Segment seg = std::minmax(a, b);
      const std::pair<std::uint32_t, Point> label{l.gen, l.sign > 0 ? a : b};
      auto [it, inserted] = edge_letters.emplace(seg, label);
      if (!inserted && it->second != label) return fail("mismatched letters on a shared grid edge");
    }
  }

  // Interior grid points: the corners of the four cells form a closed walk
  // of length 4 in the link with four distinct vertices.
  std::map<Point, std::vector<CornerEdge>> corners_at;
  for (const auto& p : w.cells)
    for (int k = 0; k < 4; ++k)
      corners_at[grid_point(p.x, p.y, corner_position(p, k))].push_back(corner_edge(c.squares[p.square], k));
  for (const auto& [q, corners] : corners_at) {
    if (corners.size() < 4) continue;
    if (corners.size() > 4) return fail("more than four cells at a grid point");
    // Follow the walk: start at corners[0].u and greedily chain.
    std::vector<bool> used(4, false);
    std::vector<LinkVertex> walk{corners[0].u, corners[0].v};
    used[0] = true;
    for (int step = 1; step < 4; ++step) {
      bool found = false;
      for (std::size_t i = 0; i < 4 && !found; ++i) {
        if (used[i]) continue;
        if (corners[i].u == walk.back() || corners[i].v == walk.back()) {
          walk.push_back(corners[i].other(walk.back()));
          used[i] = found = true;
        }
      }
      if (!found) return fail("corners at an interior point do not chain");
    }
    if (walk.back() != walk.front()) return fail("corners at an interior point do not close up");
    walk.pop_back();
    std::sort(walk.begin(), walk.end());
    if (std::adjacent_find(walk.begin(), walk.end()) != walk.end())
      return fail("interior point link walk repeats a vertex");
  }
  return true;
}

std::string_view to_string(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::NotNPC: return "NotNPC";
    case VerdictTag::HyperbolicCertA: return "HyperbolicCertA";
    case VerdictTag::HyperbolicCertB: return "HyperbolicCertB";
    case VerdictTag::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Verdict hyperbolicity_verdict(const SquareComplex& c, int max_radius) {
  if (max_radius < 1) throw InputError("max radius must be at least 1");
  Verdict v;
  v.largeness = largeness(build_link(c));
  if (!v.largeness.is_large) {
    v.tag = VerdictTag::NotNPC;
    return v;
  }
  v.eligible = eligible_squares(c);
  if (v.eligible.empty()) {
    v.tag = VerdictTag::HyperbolicCertA;
    return v;
  }
  for (int r = 1; r <= max_radius; ++r) {
    auto w = search_flat_disk(c, r);
    if (!w) {
      v.tag = VerdictTag::HyperbolicCertB;
      v.radius = r;
      v.witness.reset();
      return v;
    }
    v.witness = std::move(w);
    v.radius = r;
  }
  v.tag = VerdictTag::Inconclusive;
  return v;
}

}  // namespace sqfiber
