#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqfiber/complex.hpp"
#include "sqfiber/link.hpp"

namespace sqfiber {

// Integer weight per generator; encodes a homomorphism to Z and, when all
// weights are nonzero and every square is affine, a circle-valued Morse map.
// Zero weights are representable so that inadmissible input can be reported.
class WeightSystem {
 public:
  WeightSystem() = default;
  explicit WeightSystem(std::vector<Weight> weights) : weights_(std::move(weights)) {}

  // "a=1,b=2,a0=3": a bare stem assigns every generator with that stem, a full
  // generator name overrides it. Every generator must end up with a weight.
  static WeightSystem parse(std::string_view spec, const Alphabet& alphabet);

  std::span<const Weight> values() const { return weights_; }
  Weight operator[](std::size_t g) const { return weights_.at(g); }
  std::size_t size() const { return weights_.size(); }
  WeightSystem negated() const;
  WeightSystem signs() const;
  bool all_unit() const;

  std::string to_string(const Alphabet& alphabet) const;
  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::vector<Weight> weights_;
};

// Corner heights of one square relative to corner 0.
struct CornerHeights {
  std::array<Weight, 4> h{};
  int min_corner = 0;
  int max_corner = 0;

  Weight span() const { return h[static_cast<std::size_t>(max_corner)] - h[static_cast<std::size_t>(min_corner)]; }
};

struct AdmissibilityReport {
  bool admissible = false;
  std::vector<std::size_t> zero_weight;       // generator indices
  std::vector<std::size_t> nonzero_sum;       // square ids
  std::vector<std::size_t> affine_violations; // square ids
  std::vector<CornerHeights> heights;         // per square, filled when admissible
};

AdmissibilityReport check_admissible(const SquareComplex& c, const WeightSystem& ws);

struct LatticeBasis {
  std::size_t rank = 0;
  std::vector<std::vector<Weight>> basis;  // rows in Hermite normal form

  WeightSystem combination(std::span<const Weight> coords) const;
};

// Basis of the integer solutions of signed_weight(boundary) = 0 over all
// squares, i.e. of Hom(pi_1, Z).
LatticeBasis weight_lattice(const SquareComplex& c);

enum class LinkSide { Ascending, Descending };

struct DirectionalLink {
  LinkSide side = LinkSide::Ascending;
  std::vector<LinkVertex> vertices;
  std::vector<CornerEdge> edges;  // one per square: its min (asc) or max (desc) corner
  bool is_tree = false;
  std::size_t component_count = 0;
};

// Throws PreconditionFailed for inadmissible weights.
std::pair<DirectionalLink, DirectionalLink> directional_links(const SquareComplex& c, const WeightSystem& ws);

// Preimage of the vertex's image under the circle-valued map.
struct FiberGraph {
  struct Point {
    std::uint32_t gen = 0;  // meaningless for the base vertex
    Weight index = 0;       // 0 = base vertex, else 1..|w|-1 from the generator's start
  };
  struct Arc {
    std::size_t square = 0;
    Weight level = 0;  // height above the square's min corner
    std::size_t from = 0, to = 0;
  };
  std::vector<Point> vertices;
  std::vector<Arc> edges;
  Weight chi = 0;
  std::size_t component_count = 0;
  bool connected() const { return component_count == 1; }
};

FiberGraph fiber_graph(const SquareComplex& c, const WeightSystem& ws);

// 1 + sum_g (|w(g)| - 1) - sum_s (span(s) - 1), without building the graph.
Weight fiber_chi_closed_form(const SquareComplex& c, const WeightSystem& ws);

// Rank of the free kernel, 1 - chi. Throws PreconditionFailed naming the
// failed condition when the weights are inadmissible, a directional link is
// not a tree or the fiber is disconnected.
Weight kernel_rank(const SquareComplex& c, const WeightSystem& ws);

struct FiberingRow {
  std::vector<Weight> coords;
  WeightSystem weights;
  bool admissible = false;
  bool asc_tree = false;
  bool desc_tree = false;
  std::optional<Weight> chi;
  std::size_t fiber_components = 0;
  std::optional<Weight> rank;
  bool primitive = false;
};

struct FiberingTable {
  LatticeBasis lattice;
  std::vector<FiberingRow> rows;
};

// Every lattice vector with coordinates in [-bound, bound] and no zero
// generator weight, in lexicographic coordinate order.
FiberingTable fibering_scan(const SquareComplex& c, int bound);

struct FiberingVerdict {
  bool infinitely_many = false;
  std::size_t lattice_rank = 0;
  std::vector<int> orthant;     // sign pattern of lattice coordinates of the witness
  std::optional<WeightSystem> witness;
  std::string reason;
};

FiberingVerdict infinite_fibering_verdict(const SquareComplex& c);

}  // namespace sqfiber
