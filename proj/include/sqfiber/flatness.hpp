#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sqfiber/complex.hpp"
#include "sqfiber/link.hpp"

namespace sqfiber {

// Squares with no poison corner. Only these can occur in a flat plane.
std::vector<std::size_t> eligible_squares(const SquareComplex& c);

// One grid cell of a developed disk. The cell with lower-left grid point
// (x, y) carries square `square`; its corner k sits at grid position
// (rot + k) mod 4, or (rot - k) mod 4 when reflected, where positions run
// counterclockwise from the lower-left point.
struct Placement {
  int x = 0, y = 0;
  std::size_t square = 0;
  int rot = 0;
  bool refl = false;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct DiskWitness {
  int radius = 0;
  std::vector<Placement> cells;  // in search order, seed first

  friend bool operator==(const DiskWitness&, const DiskWitness&) = default;
};

// Cells (x, y) with max(|x|, |y|) < radius, centred on the seed cell (0, 0).
std::vector<std::pair<int, int>> disk_cells(int radius);

// Exhaustive development of eligible squares over the radius-R disk. Returns
// the first complete placement in search order, or nullopt when none exists.
std::optional<DiskWitness> search_flat_disk(const SquareComplex& c, int radius);

// Independent re-check of a witness: full coverage of the disk, edge letters
// and orientations agree across every shared grid edge, and the four corners
// at every interior grid point close up into a link 4-cycle with distinct
// vertices. On failure `why` (if given) receives a description.
bool validate_disk(const SquareComplex& c, const DiskWitness& w, std::string* why = nullptr);

enum class VerdictTag { NotNPC, HyperbolicCertA, HyperbolicCertB, Inconclusive };
std::string_view to_string(VerdictTag tag);

struct Verdict {
  VerdictTag tag = VerdictTag::Inconclusive;
  int radius = 0;  // CertB: smallest radius without a disk; Inconclusive: largest radius searched
  std::vector<std::size_t> eligible;
  std::optional<DiskWitness> witness;
  LargenessReport largeness;
};

constexpr int kDefaultMaxRadius = 3;

Verdict hyperbolicity_verdict(const SquareComplex& c, int max_radius = kDefaultMaxRadius);

}  // namespace sqfiber
