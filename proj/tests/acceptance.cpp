// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "sqfiber/flatness.hpp"

using namespace sqfiber;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

WeightSystem ab(const SquareComplex& c, Weight m, Weight n) {
  return WeightSystem::parse("a=" + std::to_string(m) + ",b=" + std::to_string(n), c.alphabet);
}

WeightSystem ones(const SquareComplex& c) { return WeightSystem(std::vector<Weight>(c.alphabet.size(), 1)); }

std::set<std::string> edge_labels(const SquareComplex& c, const std::vector<CornerEdge>& edges) {
  std::set<std::string> out;
  for (const auto& e : edges) {
    auto a = vertex_label(c.alphabet, e.u), b = vertex_label(c.alphabet, e.v);
    if (b < a) std::swap(a, b);
    out.insert(a + " " + b);
  }
  return out;
}

// Rank read off the explicit fiber graph (E - V + 1) after checking the
// fibering conditions independently of kernel_rank.
std::optional<Weight> explicit_rank(const SquareComplex& c, const WeightSystem& ws) {
  if (!check_admissible(c, ws).admissible) return std::nullopt;
  const auto [asc, desc] = directional_links(c, ws);
  const auto fg = fiber_graph(c, ws);
  if (!asc.is_tree || !desc.is_tree || !fg.connected()) return std::nullopt;
  return static_cast<Weight>(fg.edges.size()) - static_cast<Weight>(fg.vertices.size()) + 1;
}

bool cert_a(const SquareComplex& c) { return hyperbolicity_verdict(c).tag == VerdictTag::HyperbolicCertA; }

std::map<std::string, std::string> images(const FiberedComplex& fc, const Automorphism& f) {
  const auto names = fc.names();
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = format_basis_word(f.images[i], names);
  return out;
}

void check_images(const std::map<std::string, std::string>& got, const std::map<std::string, std::string>& want) {
  for (const auto& [k, v] : want) {
    auto it = got.find(k);
    expect(it != got.end() && it->second == v, "image of " + k + " is '" + (it == got.end() ? "?" : it->second) + "'");
  }
}

std::size_t new_edge_girth(const SquareComplex& c, std::size_t square) {
  const auto link = build_link(c);
  std::size_t best = SIZE_MAX;
  for (int k = 0; k < 4; ++k)
    if (auto g = shortest_cycle_through(link, 4 * square + static_cast<std::size_t>(k))) best = std::min(best, *g);
  return best;
}

void ac1() {
  const auto c = build_named("lot-a");
  const auto lr = largeness(build_link(c));
  expect(lr.is_large && lr.girth == 4u, "link large with girth 4");
  const auto poison = poison_corners(c);
  expect(poison.size() == 4, "exactly 4 poison corners");
  // bridges a1+a0+, a2+a1-, a3+a2-, a0-a3- with g+ = end of g, g- = start of g
  expect(edge_labels(c, poison) == std::set<std::string>{"a0+ a1+", "a1- a2+", "a2- a3+", "a0- a3-"},
         "poison corners are the bridge edges (identity +- convention)");
  expect(cert_a(c), "verdict HyperbolicCertA");
  const auto [asc, desc] = directional_links(c, ones(c));
  expect(asc.is_tree && desc.is_tree, "ascending and descending links are trees");
  expect(kernel_rank(c, ones(c)) == 4, "kernel rank 4");
}

void ac2() {
  for (int k = 4; k <= 8; ++k) {
    const auto c = build_lot_family(k, "a");
    expect(kernel_rank(c, ones(c)) == k, "rank k at k=" + std::to_string(k));
    expect(explicit_rank(c, ones(c)) == k, "explicit fiber rank at k=" + std::to_string(k));
    expect(cert_a(c), "HyperbolicCertA at k=" + std::to_string(k));
  }
}

void ac3() {
  const auto c = build_named("g1");
  expect(largeness(build_link(c)).is_large, "g1 link large");
  expect(new_edge_girth(c, 8) >= 5, "no cycle of length < 5 through the added square");
  expect(cert_a(c), "HyperbolicCertA");
  expect(weight_lattice(c).rank == 2, "lattice rank 2");
  Weight best = -1;
  std::pair<int, int> at;
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      if (!oracle::coprime(m, n)) continue;
      const auto r = explicit_rank(c, ab(c, m, n));
      const Weight formula = 4 * m + 4 * n + 1;
      expect(r == formula, "explicit rank at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      expect(kernel_rank(c, ab(c, m, n)) == formula, "kernel_rank at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      if (best < 0 || *r < best) best = *r, at = {m, n};
    }
  expect(best == 9 && at == std::pair{1, 1}, "minimum rank 9 at (1,1)");
}

void ac4() {
  const auto c = combine(build_lot_family(5, "a"), build_lot_family(6, "b"), "a0 b2 a1^-1 b0^-1");
  expect(largeness(build_link(c)).is_large, "link large");
  expect(cert_a(c), "HyperbolicCertA");
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const auto ws = ab(c, m, n);
      const Weight formula = 5 * m + 6 * n + 1;
      expect(1 - fiber_graph(c, ws).chi == formula, "1 - chi at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      if (oracle::coprime(m, n)) expect(explicit_rank(c, ws) == formula, "explicit rank at (" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
}

void ac5() {
  const auto gf = build_named("gf");
  const auto pf = poison_corners(gf);
  expect(pf.size() == 12, "gf has 12 poison corners");
  std::vector<int> per(gf.squares.size(), 0);
  for (const auto& e : pf) ++per[e.at.square];
  for (int n : per) expect(n == 2, "two poison corners per gf square");
  const auto g2 = build_named("g2");
  expect(poison_corners(g2).size() == 4, "g2 has 4 poison corners");
  const auto el = eligible_squares(g2);
  expect(el.size() == 3 && std::find(el.begin(), el.end(), 6) != el.end(), "3 eligible squares including the added one");
}

void ac6() {
  const auto g2 = build_named("g2");
  expect(!search_flat_disk(g2, 2).has_value(), "no radius-2 disk for g2");
  const auto v = hyperbolicity_verdict(g2, 3);
  expect(v.tag == VerdictTag::HyperbolicCertB && v.radius == 2, "g2 verdict HyperbolicCertB(2)");
  const auto torus = build_named("torus");
  const auto t = hyperbolicity_verdict(torus, 3);
  expect(t.tag == VerdictTag::Inconclusive, "torus Inconclusive");
  expect(t.witness && t.witness->radius == 3 && validate_disk(torus, *t.witness), "torus radius-3 witness validates");
}

void ac7() {
  const auto c = build_named("g2");
  expect(kernel_rank(c, ab(c, 1, 1)) == 7, "rank(1,1) = 7");
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      if (oracle::coprime(m, n))
        expect(explicit_rank(c, ab(c, m, n)) == 1 + 3 * m + 3 * n, "explicit rank at (" + std::to_string(m) + "," + std::to_string(n) + ")");
}

void ac8() {
  const auto g1 = build_named("g1");
  const FiberedComplex f1(g1, ab(g1, 1, 1));
  check_images(images(f1, conjugation_automorphism(f1, parse_word("a0", g1.alphabet))),
               {{"alpha1", "alpha1 alpha0"},
                {"alpha2", "alpha1 alpha2 alpha0"},
                {"alpha3", "alpha1 alpha2 alpha3 alpha0"},
                {"alpha0", "alpha3^-1 alpha2^-1 alpha1^-1"},
                {"beta0", "alpha1 gamma^-1 beta2^-1 beta1^-1 beta3^-1 gamma alpha1^-1"},
                {"beta1", "alpha1 gamma^-1 beta2^-1 beta0 beta1 beta2 gamma alpha1^-1"},
                {"beta2", "alpha1 gamma^-1 beta0 beta1 beta2 gamma alpha1^-1"},
                {"beta3", "alpha1 gamma^-1 beta3 beta0 beta1 beta2 gamma alpha1^-1"}});
  const auto g2 = build_named("g2");
  const FiberedComplex f2(g2, ab(g2, 1, 1));
  check_images(images(f2, conjugation_automorphism(f2, parse_word("a3", g2.alphabet))),
               {{"alpha1", "alpha3^-1 beta2^-1 beta3^-1 alpha2^-1 gamma beta2 alpha3"},
                {"alpha2", "alpha3^-1 beta2^-1 gamma^-1 alpha2 alpha1 beta2 alpha3"},
                {"alpha3", "alpha1 beta2 alpha3"},
                {"beta1", "alpha3^-1 beta2^-1 gamma^-1"},
                {"beta2", "alpha3^-1 beta1 gamma beta2 alpha3"},
                {"beta3", "alpha3^-1 beta2^-1 gamma^-1 alpha2 beta3 beta1 gamma beta2 alpha3"},
                {"gamma", "alpha3^-1 beta2^-1 gamma^-1 beta1^-1 alpha1 beta2 alpha3"}});
}

void ac9() {
  const auto start = std::chrono::steady_clock::now();
  const auto g2 = build_named("g2");
  const FiberedComplex fc(g2, ab(g2, 1, 1));
  const auto t = transition_matrix(conjugation_automorphism(fc, parse_word("a3", g2.alphabet)));
  expect(t.dim() == 7, "7x7 matrix");
  expect(t.irreducible, "irreducible");
  expect(t.primitive && t.witness_power && *t.witness_power <= 3, "primitive with witness power <= 3");
  const auto m3 = oracle::multiply(oracle::multiply(t.entries, t.entries), t.entries);
  expect(oracle::positive(m3), "M^3 entrywise positive");
  const auto elapsed = std::chrono::steady_clock::now() - start;
  expect(elapsed < std::chrono::seconds(1), "runtime under 1 s");
}

void ac10() {
  const auto g1 = build_named("g1");
  const FiberedComplex f1(g1, ab(g1, 1, 1));
  const auto names = f1.names();
  const auto f = conjugation_automorphism(f1, parse_word("a0", g1.alphabet));
  auto subset_names = [&](const FactorWitness& w) {
    std::set<std::string> s;
    for (std::size_t i : w.subset) s.insert(names[i]);
    return s;
  };
  const std::set<std::string> alphas{"alpha0", "alpha1", "alpha2", "alpha3"}, betas{"beta0", "beta1", "beta2", "beta3"};
  const auto first = invariant_factor_witness(f);
  expect(first && subset_names(*first) == alphas && first->conjugator.empty(), "({alpha}, empty conjugator) witness");
  bool beta = false;
  for (const auto& w : all_invariant_factor_witnesses(f))
    beta |= subset_names(w) == betas && format_basis_word(w.conjugator, names) == "alpha1 gamma^-1";
  expect(beta, "({beta}, alpha1 gamma^-1) witness");
  const auto g2 = build_named("g2");
  const FiberedComplex f2(g2, ab(g2, 1, 1));
  expect(!invariant_factor_witness(conjugation_automorphism(f2, parse_word("a3", g2.alphabet))).has_value(),
         "no generator-subset witness for g2");
}

void ac11() {
  std::mt19937 rng(20261019);
  // free reduction idempotence
  for (int i = 0; i < 300; ++i) {
    const Word w = oracle::random_word(rng, 4, static_cast<std::size_t>(i % 40));
    expect(free_reduce(free_reduce(w)) == free_reduce(w), "free_reduce idempotent");
  }
  // chi oracle on 200 random admissible weight vectors
  std::vector<SquareComplex> families{build_named("g1"), build_named("g2"),
                                      combine(build_lot_family(5, "a"), build_lot_family(6, "b"), "a0 b2 a1^-1 b0^-1")};
  std::uniform_int_distribution<int> coord(-8, 8), fam(0, 2);
  for (int done = 0; done < 200;) {
    const int m = coord(rng), n = coord(rng);
    if (m == 0 || n == 0) continue;
    const auto& c = families[static_cast<std::size_t>(fam(rng))];
    const auto ws = ab(c, m, n);
    expect(check_admissible(c, ws).admissible, "random weights admissible");
    const auto chi = fiber_graph(c, ws).chi;
    expect(chi == fiber_chi_closed_form(c, ws) && chi == oracle::chi_by_heights(c, ws), "chi oracle");
    ++done;
  }
  // invertibility
  for (const char* name : {"g1", "g2"}) {
    const auto c = build_named(name);
    const FiberedComplex fc(c, ab(c, 1, 1));
    for (const char* t : {"a0", "a1", "b0", "a3"}) {
      if (!c.alphabet.find(t)) continue;
      const auto f = conjugation_automorphism(fc, parse_word(t, c.alphabet));
      expect(is_identity(compose(f, invert(fc, f))), std::string("compose(f, invert f) = id for ") + t + " on " + name);
    }
    // subadditivity
    std::vector<Automorphism> fs;
    for (const char* t : {"a1", "a3", "b1"}) fs.push_back(conjugation_automorphism(fc, parse_word(t, c.alphabet)));
    for (const auto& f : fs)
      for (const auto& g : fs) {
        const auto lhs = transition_matrix(compose(f, g)).entries;
        const auto rhs = oracle::multiply(transition_matrix(f).entries, transition_matrix(g).entries);
        for (std::size_t i = 0; i < lhs.size(); ++i)
          for (std::size_t j = 0; j < lhs.size(); ++j) expect(lhs[i][j] <= rhs[i][j], "transition subadditivity");
      }
  }
  // flat-disk witness revalidation
  for (int i = 0; i < 30; ++i) {
    const auto c = oracle::random_complex(rng, 2, 2);
    for (int r = 1; r <= 3; ++r)
      if (auto w = search_flat_disk(c, r)) expect(validate_disk(c, *w), "random witness validates");
  }
  const auto torus = build_named("torus");
  for (int r = 1; r <= 4; ++r) expect(validate_disk(torus, *search_flat_disk(torus, r)), "torus witness validates");
  // determinism
  const auto g2 = build_named("g2");
  const FiberedComplex fc(g2, ab(g2, 1, 1));
  const auto a = conjugation_automorphism(fc, parse_word("a3", g2.alphabet));
  const auto b = conjugation_automorphism(FiberedComplex(g2, ab(g2, 1, 1)), parse_word("a3", g2.alphabet));
  expect(a == b, "monodromy deterministic");
  expect(search_flat_disk(torus, 3) == search_flat_disk(torus, 3), "disk search deterministic");
  expect(hyperbolicity_verdict(g2).radius == hyperbolicity_verdict(g2).radius, "verdict deterministic");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"LOT block: large, 4 bridge poison corners, CertA, tree links, rank 4", ac1},
      {"LOT family k=4..8: rank k and CertA", ac2},
      {"G1: large, new cycles >= 5, CertA, lattice rank 2, rank 4m+4n+1, minimum 9", ac3},
      {"mixed L(5,a) L(6,b): large, CertA, rank 5m+6n+1", ac4},
      {"GF / G2 poison bookkeeping: 12, 4, three eligible squares", ac5},
      {"G2 flatness: no radius-2 disk, CertB(2); torus Inconclusive with radius-3 witness", ac6},
      {"G2 ranks: 7 at (1,1), 1+3m+3n", ac7},
      {"monodromy formulas for g1/a0 and g2/a3", ac8},
      {"g2/a3 transition matrix irreducible, primitive, M^3 > 0", ac9},
      {"reducibility witnesses for g1/a0, none for g2/a3", ac10},
      {"property suites", ac11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << "AC" << (i + 1) << ' ' << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  (" << ms << " ms)";
    if (!ok) std::cout << "  -- " << detail;
    std::cout << '\n';
    failed += ok ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
