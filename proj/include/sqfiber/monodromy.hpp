#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sqfiber/complex.hpp"
#include "sqfiber/morse.hpp"

namespace sqfiber {

// Free generator of the kernel carried by one square: the fiber arc through
// the square's middle, represented by the two letters e2 e3 of the boundary
// read from the min corner (the path over the max corner).
struct BasisLoop {
  std::size_t square = 0;
  std::string name;
  Word rep;
};

// Display names: a conjugation square x y x^-1 z^-1 is named after its
// doubled generator x, with stem a -> "alpha", b -> "beta" (other stems are
// kept) plus the generator's digits. The remaining squares are "gamma", or
// "gamma<id>" when there are several.
std::vector<std::string> basis_names(const SquareComplex& c);

// A unit-weight fibering whose directional links are trees and whose fiber
// is connected. Holds what the rewriting procedure needs; construction checks
// every precondition and throws on failure.
class FiberedComplex {
 public:
  FiberedComplex(SquareComplex c, WeightSystem ws);

  const SquareComplex& complex() const { return c_; }
  const WeightSystem& weights() const { return ws_; }
  const std::vector<BasisLoop>& basis() const { return basis_; }
  std::vector<std::string> names() const;

  // Word in the basis equal to w in the group. Requires signed weight 0.
  BasisWord rewrite(const Word& w) const;

  // Substitutes representatives: the inverse direction of rewrite.
  Word expand(const BasisWord& w) const;

 private:
  struct TreeStep {
    std::size_t square = 0;
    LinkVertex next = 0;
  };
  // next_[target][from]: first edge on the tree path from `from` to `target`
  using NextHop = std::vector<std::vector<std::optional<TreeStep>>>;

  static NextHop tree_routes(std::size_t vertex_count, const std::vector<CornerEdge>& edges);
  void flatten(std::vector<Letter>& w) const;
  BasisWord harvest(const std::vector<Letter>& w) const;
  Weight step(Letter l) const { return l.sign * ws_[l.gen]; }

  SquareComplex c_;
  WeightSystem ws_;
  std::vector<BasisLoop> basis_;
  std::vector<std::array<Letter, 4>> rotated_;  // boundary starting at the min corner
  NextHop up_, down_;                           // ascending / descending link trees
};

std::vector<BasisLoop> kernel_basis(const SquareComplex& c, const WeightSystem& ws);

// Automorphism of the kernel: images of the basis letters, plus the element
// of the group whose conjugation it is.
struct Automorphism {
  std::vector<BasisWord> images;
  Word conjugator;
  Weight conjugator_weight = 0;  // +-1: monodromy of the fibering, 0: inner twist

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

Automorphism identity_automorphism(std::size_t basis_size);

// x -> t x t^-1 on every basis loop. |weight(t)| <= 1.
Automorphism conjugation_automorphism(const FiberedComplex& fc, const Word& t);

BasisWord apply(const Automorphism& f, const BasisWord& w);

// (f o g)(x) = f(g(x)), conjugator t_f t_g.
Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism invert(const FiberedComplex& fc, const Automorphism& f);
bool is_identity(const Automorphism& f);

struct TransitionMatrix {
  std::vector<std::vector<Weight>> entries;  // entries[i][j]: occurrences of letter i in image j
  bool irreducible = false;
  bool primitive = false;
  std::optional<std::size_t> witness_power;  // least N with M^N > 0

  std::size_t dim() const { return entries.size(); }
};

TransitionMatrix transition_matrix(const Automorphism& f);

// Boolean reachability on the dependency digraph j -> i (entry (i, j) > 0):
// irreducible when every i is reachable from every j by a nonempty path.
bool is_irreducible(const std::vector<std::vector<Weight>>& m);
// Least N <= (dim-1)^2 + 1 with M^N entrywise positive.
std::optional<std::size_t> primitivity_power(const std::vector<std::vector<Weight>>& m);

struct FactorWitness {
  std::vector<std::size_t> subset;
  BasisWord conjugator;
};

constexpr std::size_t kMaxWitnessBasis = 16;

// c with c^-1 f(b) c a word in `subset` for every b in the subset, where c is
// the longest prefix of the images' common prefix that works.
std::optional<BasisWord> invariant_conjugator(const Automorphism& f, const std::vector<std::size_t>& subset);

// Smallest proper nonempty subset witness (ties in lexicographic order of
// index lists). Not finding one says nothing about irreducibility.
std::optional<FactorWitness> invariant_factor_witness(const Automorphism& f);
std::vector<FactorWitness> all_invariant_factor_witnesses(const Automorphism& f);

}  // namespace sqfiber
