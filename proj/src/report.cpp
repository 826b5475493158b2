#include "sqfiber/report.hpp"

#include <sstream>

#include "sqfiber/errors.hpp"
#include "sqfiber/link.hpp"
#include "sqfiber/monodromy.hpp"

namespace sqfiber::report {

namespace {

Json corner_json(const SquareComplex& c, const CornerEdge& e) {
  return Json{{"square", e.at.square},
              {"corner", e.at.corner},
              {"endpoints", {vertex_label(c.alphabet, e.u), vertex_label(c.alphabet, e.v)}}};
}

Json optional_json(const std::optional<Weight>& v) { return v ? Json(*v) : Json(nullptr); }

std::string_view kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::Loop: return "loop";
    case Violation::Kind::Bigon: return "bigon";
    case Violation::Kind::Triangle: return "triangle";
  }
  return "loop";
}

Json largeness_fields(const SquareComplex& c, const LargenessReport& lr) {
  Json out;
  out["girth"] = lr.girth ? Json(*lr.girth) : Json(nullptr);
  out["is_large"] = lr.is_large;
  Json violations = Json::array();
  for (const auto& v : lr.violations) {
    Json corners = Json::array();
    for (const auto& cr : v.corners) corners.push_back({{"square", cr.square}, {"corner", cr.corner}});
    Json vertices = Json::array();
    for (LinkVertex x : v.vertices) vertices.push_back(vertex_label(c.alphabet, x));
    violations.push_back({{"kind", kind_name(v.kind)}, {"corners", corners}, {"vertices", vertices}});
  }
  out["violations"] = violations;
  return out;
}

Json poison_fields(const SquareComplex& c, const LinkGraph& link) {
  const auto poison = poison_corners(link);
  Json list = Json::array();
  for (const auto& e : poison) list.push_back(corner_json(c, e));
  return Json{{"poison_count", poison.size()}, {"poison", list}};
}

Json directional_json(const SquareComplex& c, const DirectionalLink& d) {
  Json vertices = Json::array();
  for (LinkVertex v : d.vertices) vertices.push_back(vertex_label(c.alphabet, v));
  Json edges = Json::array();
  for (const auto& e : d.edges) edges.push_back(corner_json(c, e));
  return Json{{"vertices", vertices}, {"edges", edges}, {"is_tree", d.is_tree}, {"components", d.component_count}};
}

Json lattice_fields(const LatticeBasis& lb) {
  return Json{{"lattice_rank", lb.rank}, {"basis", lb.basis}};
}

Json ids(const std::vector<std::size_t>& v) { return Json(v); }

std::string naming_rule(const SquareComplex& c, const Square& s) {
  if (auto g = conjugating_generator(s)) return "conjugation square doubling " + c.alphabet.name(*g);
  return "square without a doubled generator";
}

}  // namespace

Json complex_section(const SquareComplex& c) {
  Json squares = Json::array();
  for (const auto& s : c.squares) squares.push_back(format_word(s.boundary, c.alphabet));
  Json dups = Json::array();
  for (const auto& [a, b] : duplicate_squares(c)) dups.push_back({a, b});
  return Json{{"generators", c.alphabet.names()},
              {"squares", squares},
              {"duplicates", dups},
              {"provenance", c.provenance}};
}

Json link_section(const SquareComplex& c) {
  const LinkGraph link = build_link(c);
  Json vertices = Json::array();
  for (LinkVertex v = 0; v < link.vertex_count; ++v) vertices.push_back(vertex_label(c.alphabet, v));
  Json edges = Json::array();
  for (const auto& e : link.edges) edges.push_back(corner_json(c, e));
  Json out{{"vertices", vertices}, {"edges", edges}};
  out.update(largeness_fields(c, largeness(link)));
  out.update(poison_fields(c, link));
  return out;
}

Json large_section(const SquareComplex& c) { return largeness_fields(c, largeness(build_link(c))); }

Json poison_section(const SquareComplex& c) { return poison_fields(c, build_link(c)); }

Json flat_section(const SquareComplex& c, int max_radius) {
  const Verdict v = hyperbolicity_verdict(c, max_radius);
  Json out{{"verdict", to_string(v.tag)}, {"max_radius", max_radius}};
  out["radius"] = v.tag == VerdictTag::HyperbolicCertB || v.tag == VerdictTag::Inconclusive ? Json(v.radius) : Json(nullptr);
  out["eligible"] = ids(v.eligible);
  if (v.witness) {
    Json cells = Json::array();
    for (const auto& p : v.witness->cells)
      cells.push_back({{"x", p.x}, {"y", p.y}, {"square", p.square}, {"rot", p.rot}, {"refl", p.refl}});
    out["witness"] = cells;
    out["witness_valid"] = validate_disk(c, *v.witness);
  } else {
    out["witness"] = nullptr;
    out["witness_valid"] = nullptr;
  }
  return out;
}

Json lattice_section(const SquareComplex& c) { return lattice_fields(weight_lattice(c)); }

Json morse_section(const SquareComplex& c, const WeightSystem& ws) {
  Json out{{"weights", ws.to_string(c.alphabet)}};
  out.update(lattice_fields(weight_lattice(c)));
  const auto adm = check_admissible(c, ws);
  out["admissible"] = adm.admissible;
  Json zero = Json::array();
  for (std::size_t g : adm.zero_weight) zero.push_back(c.alphabet.name(static_cast<std::uint32_t>(g)));
  out["zero_weight"] = zero;
  out["nonzero_sum"] = ids(adm.nonzero_sum);
  out["affine_violations"] = ids(adm.affine_violations);
  if (!adm.admissible) {
    out["asc"] = out["desc"] = out["fiber"] = out["chi"] = out["rank"] = nullptr;
    out["rank_skipped"] = "weights are not admissible";
    return out;
  }
  const auto [asc, desc] = directional_links(c, ws);
  out["asc"] = directional_json(c, asc);
  out["desc"] = directional_json(c, desc);
  const FiberGraph fg = fiber_graph(c, ws);
  out["fiber"] = {{"vertices", fg.vertices.size()}, {"edges", fg.edges.size()}, {"components", fg.component_count}};
  out["chi"] = fg.chi;
  out["chi_closed_form"] = fiber_chi_closed_form(c, ws);
  try {
    out["rank"] = kernel_rank(c, ws);
  } catch (const PreconditionFailed& e) {
    out["rank"] = nullptr;
    out["rank_skipped"] = e.what();
  }
  return out;
}

Json fiberings_section(const SquareComplex& c, int bound) {
  if (bound < 0) throw InputError("bound must be non-negative");
  const FiberingTable t = fibering_scan(c, bound);
  Json out = lattice_fields(t.lattice);
  out["bound"] = bound;
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"coords", r.coords},
                    {"weights", r.weights.to_string(c.alphabet)},
                    {"admissible", r.admissible},
                    {"asc_tree", r.asc_tree},
                    {"desc_tree", r.desc_tree},
                    {"chi", optional_json(r.chi)},
                    {"fiber_components", r.fiber_components},
                    {"rank", optional_json(r.rank)},
                    {"primitive", r.primitive}});
  }
  out["table"] = rows;
  return out;
}

Json verdict_section(const SquareComplex& c) {
  const FiberingVerdict v = infinite_fibering_verdict(c);
  return Json{{"lattice_rank", v.lattice_rank},
              {"infinite_fibering", v.infinitely_many ? "YES" : "NO"},
              {"orthant", v.orthant},
              {"witness", v.witness ? Json(v.witness->to_string(c.alphabet)) : Json(nullptr)},
              {"reason", v.reason}};
}

Json monodromy_section(const SquareComplex& c, const WeightSystem& ws, const Word& conjugator) {
  const FiberedComplex fc(c, ws);
  const auto f = conjugation_automorphism(fc, conjugator);
  const auto names = fc.names();
  Json out{{"weights", ws.to_string(c.alphabet)},
           {"conjugator", format_word(conjugator, c.alphabet)},
           {"conjugator_weight", f.conjugator_weight},
           {"kind", f.conjugator_weight == 0 ? "inner" : "monodromy"}};
  Json basis = Json::array(), naming = Json::array();
  for (const auto& b : fc.basis()) {
    basis.push_back({{"square", b.square}, {"name", b.name}, {"rep", format_word(b.rep, c.alphabet)}});
    naming.push_back({{"name", b.name},
                      {"square", b.square},
                      {"relator", format_word(c.squares[b.square].boundary, c.alphabet)},
                      {"rule", naming_rule(c, c.squares[b.square])},
                      {"orientation", "upper path from the min corner"}});
  }
  out["basis"] = basis;
  out["naming_map"] = naming;
  Json images = Json::object();
  for (std::size_t i = 0; i < f.images.size(); ++i) images[names[i]] = format_basis_word(f.images[i], names);
  out["images"] = images;
  return out;
}

Json transition_section(const SquareComplex& c, const WeightSystem& ws, const Word& conjugator) {
  Json out = monodromy_section(c, ws, conjugator);
  const FiberedComplex fc(c, ws);
  const auto t = transition_matrix(conjugation_automorphism(fc, conjugator));
  out["order"] = fc.names();
  out["matrix"] = t.entries;
  out["irreducible"] = t.irreducible;
  out["primitive"] = t.primitive;
  out["witness_power"] = t.witness_power ? Json(*t.witness_power) : Json(nullptr);
  return out;
}

Json witness_section(const SquareComplex& c, const WeightSystem& ws, const Word& conjugator) {
  Json out = monodromy_section(c, ws, conjugator);
  const FiberedComplex fc(c, ws);
  const auto f = conjugation_automorphism(fc, conjugator);
  const auto names = fc.names();
  auto witness_json = [&](const FactorWitness& w) {
    Json subset = Json::array();
    for (std::size_t i : w.subset) subset.push_back(names[i]);
    return Json{{"subset", subset}, {"conjugator", format_basis_word(w.conjugator, names)}};
  };
  const auto first = invariant_factor_witness(f);
  out["witness"] = first ? witness_json(*first) : Json(nullptr);
  Json all = Json::array();
  for (const auto& w : all_invariant_factor_witnesses(f)) all.push_back(witness_json(w));
  out["all_witnesses"] = all;
  return out;
}

Json analyze(const SquareComplex& c, const AnalyzeOptions& opts) {
  Json out;
  out["complex"] = complex_section(c);
  out["link"] = link_section(c);
  out["flat"] = flat_section(c, opts.radius);
  out["lattice"] = lattice_section(c);
  Json morse = Json::array();
  std::vector<WeightSystem> systems;
  for (const auto& spec : opts.weights) {
    systems.push_back(WeightSystem::parse(spec, c.alphabet));
    morse.push_back(morse_section(c, systems.back()));
  }
  if (systems.empty()) morse.push_back({{"skipped", "no --weights given"}});
  out["morse"] = morse;
  out["verdict"] = verdict_section(c);

  if (systems.empty()) {
    out["monodromy"] = {{"skipped", "no --weights given"}};
  } else if (!systems.front().all_unit()) {
    out["monodromy"] = {{"skipped", "first weight system is not all +-1"}};
  } else {
    const Word t = opts.conjugator ? parse_word(*opts.conjugator, c.alphabet) : Word{Letter{0, 1}};
    try {
      out["monodromy"] = monodromy_section(c, systems.front(), t);
    } catch (const InputError& e) {
      out["monodromy"] = {{"skipped", e.what()}};
    }
  }
  return out;
}

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_null()) return "none";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (x.is_array() || x.is_object()) return false;
  return true;
}

std::string flat_text(const Json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
  return s + "]";
}

void render(std::ostringstream& os, const Json& j, int indent);

void render_value(std::ostringstream& os, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_flat(v)) {
    os << pad << key << ": " << flat_text(v) << '\n';
  } else if (v.is_object()) {
    os << pad << key << ":\n";
    render(os, v, indent + 2);
  } else {
    os << pad << key << ":" << (v.empty() ? " []" : "") << '\n';
    for (const auto& item : v) {
      if (is_flat(item)) {
        os << pad << "  - " << flat_text(item) << '\n';
      } else {
        os << pad << "  -\n";
        render(os, item, indent + 4);
      }
    }
  }
}

void render(std::ostringstream& os, const Json& j, int indent) {
  for (const auto& [key, v] : j.items()) render_value(os, key, v, indent);
}

}  // namespace

std::string section_text(const std::string& name, const Json& section) {
  std::ostringstream os;
  os << "== " << name << " ==\n";
  render(os, section, 0);
  return os.str();
}

std::string analyze_text(const Json& report) {
  std::string out;
  for (const auto& [key, v] : report.items()) {
    if (key == "morse") {
      for (const auto& m : v) out += section_text("morse", m);
    } else {
      out += section_text(key, v);
    }
  }
  return out;
}

}  // namespace sqfiber::report
