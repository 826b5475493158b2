#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqfiber/complex.hpp"
#include "sqfiber/flatness.hpp"
#include "sqfiber/morse.hpp"

namespace sqfiber::report {

using Json = nlohmann::ordered_json;

Json complex_section(const SquareComplex& c);

// `link`: full link plus largeness and poison corners.
Json link_section(const SquareComplex& c);
// `check large` / `check poison`: the corresponding slices of the link report.
Json large_section(const SquareComplex& c);
Json poison_section(const SquareComplex& c);

// `check flat`
Json flat_section(const SquareComplex& c, int max_radius = kDefaultMaxRadius);

// `morse` without weights: the weight lattice alone.
Json lattice_section(const SquareComplex& c);
// `morse --weights`
Json morse_section(const SquareComplex& c, const WeightSystem& ws);
// `fiberings --bound`
Json fiberings_section(const SquareComplex& c, int bound);
// `verdict`
Json verdict_section(const SquareComplex& c);

// `monodromy`, `transition`, `reducible-witness`; each extends the previous.
Json monodromy_section(const SquareComplex& c, const WeightSystem& ws, const Word& conjugator);
Json transition_section(const SquareComplex& c, const WeightSystem& ws, const Word& conjugator);
Json witness_section(const SquareComplex& c, const WeightSystem& ws, const Word& conjugator);

struct AnalyzeOptions {
  std::vector<std::string> weights;  // weight specs, one Morse section each
  int radius = kDefaultMaxRadius;
  std::optional<std::string> conjugator;  // defaults to the first generator
};

// Sections keyed by the subcommand that produces them: complex, link, flat,
// lattice, morse[], verdict, monodromy. Sections that cannot run carry
// {"skipped": reason}.
Json analyze(const SquareComplex& c, const AnalyzeOptions& opts);

// Plain-text rendering. A section prints as "== <name> ==" followed by its
// fields; `analyze` prints its sections in order under their own names.
std::string section_text(const std::string& name, const Json& section);
std::string analyze_text(const Json& report);

}  // namespace sqfiber::report
