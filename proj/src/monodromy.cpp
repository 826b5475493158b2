#include "sqfiber/monodromy.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace sqfiber {

std::vector<std::string> basis_names(const SquareComplex& c) {
  std::vector<std::string> names(c.squares.size());
  std::vector<std::size_t> plain;
  for (const auto& s : c.squares) {
    if (auto g = conjugating_generator(s)) {
      const std::string& gen = c.alphabet.name(*g);
      const auto stem = Alphabet::stem(gen);
      const std::string greek = stem == "a" ? "alpha" : stem == "b" ? "beta" : std::string(stem);
      names[s.id] = greek + gen.substr(stem.size());
    } else {
      plain.push_back(s.id);
    }
  }
  for (std::size_t id : plain) names[id] = plain.size() == 1 ? "gamma" : "gamma" + std::to_string(id);
  // Two squares doubling the same generator: fall back to square ids.
  std::map<std::string, std::size_t> seen;
  for (const auto& n : names) ++seen[n];
  for (std::size_t id = 0; id < names.size(); ++id)
    if (seen[names[id]] > 1) names[id] = "gamma" + std::to_string(id);
  return names;
}

FiberedComplex::NextHop FiberedComplex::tree_routes(std::size_t vertex_count, const std::vector<CornerEdge>& edges) {
  std::vector<std::vector<std::pair<LinkVertex, std::size_t>>> adj(vertex_count);
  for (const auto& e : edges) {
    adj[e.u].emplace_back(e.v, e.at.square);
    adj[e.v].emplace_back(e.u, e.at.square);
  }
  NextHop hop(vertex_count, std::vector<std::optional<TreeStep>>(vertex_count));
  for (LinkVertex target = 0; target < vertex_count; ++target) {
    std::vector<bool> seen(vertex_count, false);
    std::deque<LinkVertex> queue{target};
    seen[target] = true;
    while (!queue.empty()) {
      const LinkVertex x = queue.front();
      queue.pop_front();
      for (const auto& [y, square] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = true;
        hop[target][y] = TreeStep{square, x};
        queue.push_back(y);
      }
    }
  }
  return hop;
}

FiberedComplex::FiberedComplex(SquareComplex c, WeightSystem ws) : c_(std::move(c)), ws_(std::move(ws)) {
  const auto adm = check_admissible(c_, ws_);
  if (!adm.admissible) throw PreconditionFailed("weight system is not admissible");
  if (!ws_.all_unit()) throw Unsupported("monodromy needs all weights +-1 (rank-only mode otherwise)");
  const auto [asc, desc] = directional_links(c_, ws_);
  if (!asc.is_tree) throw PreconditionFailed("ascending link is not a tree");
  if (!desc.is_tree) throw PreconditionFailed("descending link is not a tree");
  if (!fiber_graph(c_, ws_).connected()) throw PreconditionFailed("fiber graph is disconnected");

  const auto names = basis_names(c_);
  for (const auto& s : c_.squares) {
    const auto lo = static_cast<std::size_t>(adm.heights[s.id].min_corner);
    std::array<Letter, 4> e{};
    for (std::size_t k = 0; k < 4; ++k) e[k] = s.boundary[(lo + k) % 4];
    rotated_.push_back(e);
    basis_.push_back({s.id, names[s.id], Word{e[1], e[2]}});
    if (signed_weight(basis_.back().rep, ws_.values()) != 0)
      throw InvariantViolation("basis representative has nonzero weight");
  }
  const std::size_t nv = 2 * c_.alphabet.size();
  up_ = tree_routes(nv, asc.edges);
  down_ = tree_routes(nv, desc.edges);
}

std::vector<std::string> FiberedComplex::names() const {
  std::vector<std::string> out;
  for (const auto& b : basis_) out.push_back(b.name);
  return out;
}

Word FiberedComplex::expand(const BasisWord& w) const {
  Word out;
  for (const Letter& l : w) {
    const Word& rep = basis_.at(l.gen).rep;
    out.append(l.sign > 0 ? rep : rep.inverse());
  }
  return out;
}

// Lowers every peak above height 1 and raises every valley below 0 by
// pushing the entering letter across one extremal corner at a time.
void FiberedComplex::flatten(std::vector<Letter>& w) const {
  constexpr std::size_t kMaxSteps = 1'000'000;
  for (std::size_t steps = 0;; ++steps) {
    if (steps == kMaxSteps) throw InvariantViolation("peak reduction did not terminate");
    w = free_reduce(Word(std::move(w))).letters();
    Weight height = 0, top = 0, bottom = 0;
    std::size_t top_at = 0, bottom_at = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      height += step(w[i]);
      if (height > top) top = height, top_at = i + 1;
      if (height < bottom) bottom = height, bottom_at = i + 1;
    }
    const bool peak = top >= 2;
    if (!peak && bottom >= 0) return;
    const std::size_t at = peak ? top_at : bottom_at;  // leftmost extremum
    const Letter x = w[at - 1], y = w[at];
    const auto& routes = peak ? down_ : up_;
    const auto hop = routes[departure(y)][arrival(x)];
    if (!hop) throw InvariantViolation("directional link is not connected");
    const auto& e = rotated_[hop->square];
    std::array<Letter, 3> replacement{};
    if (peak) {
      // max corner sits between e2 and e3; e1 e2 e3 e4 = 1
      if (x == e[1]) replacement = {e[0].inverse(), e[3].inverse(), e[2].inverse()};
      else if (x == e[2].inverse()) replacement = {e[3], e[0], e[1]};
      else throw InvariantViolation("peak letter does not meet the max corner");
    } else {
      // min corner sits between e4 and e1
      if (x == e[3]) replacement = {e[2].inverse(), e[1].inverse(), e[0].inverse()};
      else if (x == e[0].inverse()) replacement = {e[1], e[2], e[3]};
      else throw InvariantViolation("valley letter does not meet the min corner");
    }
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(at - 1));
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(at - 1), replacement.begin(), replacement.end());
  }
}

// The flattened word is a product of unit peaks x y at heights 0 -> 1 -> 0.
// Walking the descending tree from x's arrival to y's departure peels one
// basis loop per max corner crossed.
BasisWord FiberedComplex::harvest(const std::vector<Letter>& w) const {
  if (w.size() % 2 != 0) throw InvariantViolation("flattened word has odd length");
  BasisWord out;
  for (std::size_t i = 0; i < w.size(); i += 2) {
    Letter x = w[i];
    const Letter y = w[i + 1];
    if (step(x) != 1 || step(y) != -1) throw InvariantViolation("flattened word is not a product of unit peaks");
    for (std::size_t guard = 0; !x.cancels(y); ++guard) {
      if (guard > 2 * c_.alphabet.size()) throw InvariantViolation("tree walk did not terminate");
      const auto hop = down_[departure(y)][arrival(x)];
      if (!hop) throw InvariantViolation("descending link is not connected");
      const auto& e = rotated_[hop->square];
      const auto loop = static_cast<std::uint32_t>(hop->square);
      if (x == e[1]) {
        out.push_back({loop, 1});  // e2 = gamma e3^-1
        x = e[2].inverse();
      } else if (x == e[2].inverse()) {
        out.push_back({loop, -1});  // e3^-1 = gamma^-1 e2
        x = e[1];
      } else {
        throw InvariantViolation("peak letter does not meet the max corner");
      }
    }
  }
  return free_reduce(out);
}

BasisWord FiberedComplex::rewrite(const Word& w) const {
  if (signed_weight(w, ws_.values()) != 0) throw PreconditionFailed("word does not lie in the kernel (nonzero weight)");
  std::vector<Letter> letters = w.letters();
  flatten(letters);
  return harvest(letters);
}

std::vector<BasisLoop> kernel_basis(const SquareComplex& c, const WeightSystem& ws) {
  return FiberedComplex(c, ws).basis();
}

Automorphism identity_automorphism(std::size_t basis_size) {
  Automorphism f;
  for (std::size_t i = 0; i < basis_size; ++i) f.images.push_back(BasisWord{{static_cast<std::uint32_t>(i), 1}});
  return f;
}

namespace {

Automorphism conjugate_by(const FiberedComplex& fc, const Word& t) {
  Automorphism f;
  f.conjugator = t;
  f.conjugator_weight = signed_weight(t, fc.weights().values());
  for (const auto& b : fc.basis()) f.images.push_back(fc.rewrite(t * b.rep * t.inverse()));
  return f;
}

}  // namespace

Automorphism conjugation_automorphism(const FiberedComplex& fc, const Word& t) {
  const Weight wt = signed_weight(t, fc.weights().values());
  if (wt < -1 || wt > 1) throw Unsupported("conjugator weight must be -1, 0 or +1, got " + std::to_string(wt));
  return conjugate_by(fc, t);
}

BasisWord apply(const Automorphism& f, const BasisWord& w) {
  BasisWord out;
  for (const Letter& l : w) {
    if (l.gen >= f.images.size()) throw AlphabetMismatch("basis letter outside the automorphism's basis");
    const BasisWord& img = f.images[l.gen];
    out.append(l.sign > 0 ? img : img.inverse());
  }
  return free_reduce(out);
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (f.images.size() != g.images.size()) throw InputError("automorphisms act on different bases");
  Automorphism out;
  for (const auto& img : g.images) out.images.push_back(apply(f, img));
  out.conjugator = f.conjugator * g.conjugator;
  out.conjugator_weight = f.conjugator_weight + g.conjugator_weight;
  return out;
}

Automorphism invert(const FiberedComplex& fc, const Automorphism& f) {
  if (f.images.size() != fc.basis().size()) throw InputError("automorphism does not act on this basis");
  return conjugate_by(fc, f.conjugator.inverse());
}

bool is_identity(const Automorphism& f) {
  for (std::size_t i = 0; i < f.images.size(); ++i)
    if (free_reduce(f.images[i]) != BasisWord{{static_cast<std::uint32_t>(i), 1}}) return false;
  return true;
}

bool is_irreducible(const std::vector<std::vector<Weight>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return false;
  // reach[j][i]: nonempty path j -> ... -> i
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t j = 0; j < n; ++j) {
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i][j] > 0 && !reach[j][i]) reach[j][i] = true, queue.push_back(i);
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < n; ++i)
        if (m[i][x] > 0 && !reach[j][i]) reach[j][i] = true, queue.push_back(i);
    }
  }
  for (const auto& row : reach)
    if (std::find(row.begin(), row.end(), false) != row.end()) return false;
  return true;
}

std::optional<std::size_t> primitivity_power(const std::vector<std::vector<Weight>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return std::nullopt;
  std::vector<std::vector<bool>> base(n, std::vector<bool>(n)), power;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) base[i][j] = m[i][j] > 0;
  power = base;
  const std::size_t bound = (n - 1) * (n - 1) + 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    bool positive = true;
    for (const auto& row : power)
      if (std::find(row.begin(), row.end(), false) != row.end()) positive = false;
    if (positive) return k;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (power[i][l])
          for (std::size_t j = 0; j < n; ++j)
            if (base[l][j]) next[i][j] = true;
    power = std::move(next);
  }
  return std::nullopt;
}

TransitionMatrix transition_matrix(const Automorphism& f) {
  const std::size_t n = f.images.size();
  TransitionMatrix t;
  t.entries.assign(n, std::vector<Weight>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (const Letter& l : f.images[j]) {
      if (l.gen >= n) throw AlphabetMismatch("image letter outside the basis");
      ++t.entries[l.gen][j];
    }
  }
  t.irreducible = is_irreducible(t.entries);
  t.witness_power = primitivity_power(t.entries);
  t.primitive = t.witness_power.has_value();
  if (t.primitive && !t.irreducible) throw InvariantViolation("primitive matrix reported reducible");
  return t;
}

std::optional<BasisWord> invariant_conjugator(const Automorphism& f, const std::vector<std::size_t>& subset) {
  if (subset.empty()) return std::nullopt;
  std::vector<bool> member(f.images.size(), false);
  for (std::size_t i : subset) member.at(i) = true;
  std::vector<BasisWord> images;
  for (std::size_t i : subset) images.push_back(free_reduce(f.images[i]));
  std::size_t common = images.front().size();
  for (const auto& img : images) {
    std::size_t k = 0;
    while (k < common && k < img.size() && img[k] == images.front()[k]) ++k;
    common = k;
  }
  for (std::size_t len = common + 1; len-- > 0;) {
    const BasisWord c(std::vector<Letter>(images.front().begin(), images.front().begin() + static_cast<std::ptrdiff_t>(len)));
    bool pure = true;
    for (const auto& img : images) {
      const auto inner = free_reduce(c.inverse() * img * c);
      for (const Letter& l : inner)
        if (!member[l.gen]) pure = false;
      if (!pure) break;
    }
    if (pure) return c;
  }
  return std::nullopt;
}

namespace {

template <class Fn>
void for_each_subset_by_size(std::size_t n, Fn&& fn) {
  for (std::size_t size = 1; size < n; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      if (!fn(idx)) return;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

void check_witness_size(const Automorphism& f) {
  if (f.images.size() > kMaxWitnessBasis)
    throw Unsupported("basis of " + std::to_string(f.images.size()) + " letters is too large for exhaustive subset search");
}

}  // namespace

std::optional<FactorWitness> invariant_factor_witness(const Automorphism& f) {
  check_witness_size(f);
  std::optional<FactorWitness> found;
  for_each_subset_by_size(f.images.size(), [&](const std::vector<std::size_t>& subset) {
    if (auto c = invariant_conjugator(f, subset)) {
      found = FactorWitness{subset, *c};
      return false;
    }
    return true;
  });
  return found;
}

std::vector<FactorWitness> all_invariant_factor_witnesses(const Automorphism& f) {
  check_witness_size(f);
  std::vector<FactorWitness> out;
  for_each_subset_by_size(f.images.size(), [&](const std::vector<std::size_t>& subset) {
    if (auto c = invariant_conjugator(f, subset)) out.push_back({subset, *c});
    return true;
  });
  return out;
}

}  // namespace sqfiber
