#include "sqfiber/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "sqfiber/errors.hpp"
#include "sqfiber/link.hpp"
#include "sqfiber/report.hpp"

namespace sqfiber {

namespace {

using report::Json;

SquareComplex load(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_spec(text);
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

WeightSystem weights_or_unit(const SquareComplex& c, const std::string& spec) {
  if (spec.empty()) return WeightSystem(std::vector<Weight>(c.alphabet.size(), 1));
  return WeightSystem::parse(spec, c.alphabet);
}

void emit(std::ostream& out, bool json, const std::string& name, const Json& section) {
  if (json) out << section.dump(2) << '\n';
  else out << report::section_text(name, section);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

DotHighlight highlight_for(const SquareComplex& c, const std::string& what, const std::string& weights) {
  DotHighlight h;
  auto add = [&](const CornerEdge& e) {
    h.edges.insert(4 * e.at.square + static_cast<std::size_t>(e.at.corner));
    h.vertices.insert(e.u);
    h.vertices.insert(e.v);
  };
  if (what == "poison") {
    for (const auto& e : poison_corners(c)) add(e);
  } else {
    if (weights.empty()) throw InputError("--highlight " + what + " needs --weights");
    const auto [asc, desc] = directional_links(c, WeightSystem::parse(weights, c.alphabet));
    const DirectionalLink& d = what == "asc" ? asc : desc;
    for (const auto& e : d.edges) add(e);
    h.vertices.insert(d.vertices.begin(), d.vertices.end());
  }
  return h;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square complexes: link condition, flat planes, Morse fiberings and monodromy", "sqfiber"};
  app.require_subcommand(1);

  std::string file, file2, relator, dot, highlight, weights, conjugator, named, stem = "a";
  std::vector<std::string> weight_list;
  int k = 4, radius = kDefaultMaxRadius, bound = 1;
  bool json = false;

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "complex file (- for stdin)")->required();
    sub->add_flag("--json", json, "JSON output");
    return sub;
  };

  auto* build = app.add_subcommand("build", "emit a complex in the text format");
  build->require_subcommand(1);
  auto* build_lot = build->add_subcommand("lot", "LOT family L_k");
  build_lot->add_option("--k", k, "number of generators (>= 4)")->required();
  build_lot->add_option("--stem", stem, "generator stem");
  auto* build_named_cmd = build->add_subcommand("named", "built-in complex");
  build_named_cmd->add_option("name", named)->required()->check(CLI::IsMember(named_complexes()));

  auto* combine_cmd = app.add_subcommand("combine", "disjoint union plus one extra relator");
  combine_cmd->add_option("file1", file)->required();
  combine_cmd->add_option("file2", file2)->required();
  combine_cmd->add_option("--relator", relator)->required();

  auto* add_cmd = app.add_subcommand("add-square", "append one relator");
  add_cmd->add_option("file", file)->required();
  add_cmd->add_option("--relator", relator)->required();

  auto* link_cmd = with_file(app.add_subcommand("link", "vertex link, largeness and poison corners"));
  link_cmd->add_option("--dot", dot, "write the link as DOT");
  link_cmd->add_option("--highlight", highlight)->check(CLI::IsMember({"asc", "desc", "poison"}));
  link_cmd->add_option("--weights", weights, "weights for --highlight asc|desc");

  auto* check = app.add_subcommand("check", "single certificate");
  check->require_subcommand(1);
  auto* check_large = with_file(check->add_subcommand("large", "link girth and short cycles"));
  auto* check_poison = with_file(check->add_subcommand("poison", "poison corners"));
  auto* check_flat = with_file(check->add_subcommand("flat", "flat-disk search and hyperbolicity verdict"));
  check_flat->add_option("--radius", radius, "largest disk radius searched")->check(CLI::PositiveNumber);

  auto* morse_cmd = with_file(app.add_subcommand("morse", "weight lattice and one Morse weight system"));
  morse_cmd->add_option("--weights", weights);

  auto* fib_cmd = with_file(app.add_subcommand("fiberings", "scan the weight lattice"));
  fib_cmd->add_option("--bound", bound)->check(CLI::NonNegativeNumber);

  auto* verdict_cmd = with_file(app.add_subcommand("verdict", "infinitely many fiberings?"));

  std::vector<CLI::App*> mono_cmds;
  for (const char* name : {"monodromy", "transition", "reducible-witness"}) {
    auto* sub = with_file(app.add_subcommand(name, "conjugation automorphism of the kernel"));
    sub->add_option("--weights", weights, "unit weights (default: all 1)");
    sub->add_option("--conjugator", conjugator)->required();
    mono_cmds.push_back(sub);
  }

  auto* analyze_cmd = with_file(app.add_subcommand("analyze", "full pipeline"));
  analyze_cmd->add_option("--weights", weight_list, "weight system (repeatable)");
  analyze_cmd->add_option("--radius", radius)->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--conjugator", conjugator, "conjugator for the monodromy section (default: first generator)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const bool ok = e.get_exit_code() == 0;
    (ok ? out : err) << (ok ? app.help() : std::string(e.what()) + "\n" + app.help());
    return ok ? 0 : 1;
  }

  try {
    if (build_lot->parsed()) {
      out << render(build_lot_family(k, stem));
    } else if (build_named_cmd->parsed()) {
      out << render(build_named(named));
    } else if (combine_cmd->parsed()) {
      out << render(combine(load(file), load(file2), relator));
    } else if (add_cmd->parsed()) {
      out << render(add_square(load(file), relator));
    } else if (link_cmd->parsed()) {
      const auto c = load(file);
      if (!highlight.empty() && dot.empty()) throw InputError("--highlight needs --dot");
      if (!dot.empty()) write_file(dot, export_dot(build_link(c), c, highlight.empty() ? DotHighlight{} : highlight_for(c, highlight, weights)));
      emit(out, json, "link", report::link_section(c));
    } else if (check_large->parsed()) {
      emit(out, json, "large", report::large_section(load(file)));
    } else if (check_poison->parsed()) {
      emit(out, json, "poison", report::poison_section(load(file)));
    } else if (check_flat->parsed()) {
      emit(out, json, "flat", report::flat_section(load(file), radius));
    } else if (morse_cmd->parsed()) {
      const auto c = load(file);
      if (weights.empty()) emit(out, json, "lattice", report::lattice_section(c));
      else emit(out, json, "morse", report::morse_section(c, WeightSystem::parse(weights, c.alphabet)));
    } else if (fib_cmd->parsed()) {
      emit(out, json, "fiberings", report::fiberings_section(load(file), bound));
    } else if (verdict_cmd->parsed()) {
      emit(out, json, "verdict", report::verdict_section(load(file)));
    } else if (analyze_cmd->parsed()) {
      report::AnalyzeOptions opts;
      opts.weights = weight_list;
      opts.radius = radius;
      if (!conjugator.empty()) opts.conjugator = conjugator;
      const Json r = report::analyze(load(file), opts);
      if (json) out << r.dump(2) << '\n';
      else out << report::analyze_text(r);
    } else {
      for (auto* sub : mono_cmds) {
        if (!sub->parsed()) continue;
        const auto c = load(file);
        const auto ws = weights_or_unit(c, weights);
        const Word t = parse_word(conjugator, c.alphabet);
        const std::string name = sub->get_name();
        if (name == "monodromy") emit(out, json, name, report::monodromy_section(c, ws, t));
        else if (name == "transition") emit(out, json, name, report::transition_section(c, ws, t));
        else emit(out, json, name, report::witness_section(c, ws, t));
      }
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace sqfiber
