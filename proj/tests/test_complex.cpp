#include <doctest.h>

#include "oracles.hpp"

using namespace sqfiber;

namespace {

std::vector<std::string> boundaries(const SquareComplex& c) {
  std::vector<std::string> out;
  for (const auto& s : c.squares) out.push_back(format_word(s.boundary, c.alphabet));
  return out;
}

}  // namespace

TEST_CASE("parse_spec expands LOG edges") {
  const auto c = parse_spec("generators a0 a4 a1\nedge label=a1 from=a4 to=a0\n");
  REQUIRE(c.squares.size() == 1);
  CHECK(format_word(c.squares[0].boundary, c.alphabet) == "a1 a0 a1^-1 a4^-1");
  CHECK(parse_spec("generators a b\n# nothing else\n").squares.empty());
}

TEST_CASE("parse_spec errors") {
  CHECK_THROWS_AS(parse_spec("generators a b\nsquare a1 a1^-1 a0 a0^-1\n"), InputError);
  CHECK_THROWS_AS(parse_spec("generators a0 a1\nsquare a1 a1^-1 a0 a0^-1\n"), InputError);
  CHECK_THROWS_AS(parse_spec("generators a0 a1\nsquare a1 a0 a1^-1 a1^-1\n"), InputError);  // wraparound
  CHECK_THROWS_AS(parse_spec("generators a0 a1\nsquare a1 a0 a1^-1\n"), InputError);
  CHECK_THROWS_AS(parse_spec("generators a0 a0\n"), InputError);
  CHECK_THROWS_AS(parse_spec("generators a0 a1\nedge label=a2 from=a0 to=a1\n"), InputError);
  CHECK_THROWS_AS(parse_spec("generators a0 a1\nedge label=a0 from=a0 to=a9\n"), InputError);
  CHECK_THROWS_AS(parse_spec("generators a0 a1\nwibble\n"), InputError);
}

TEST_CASE("LOG edge relator abelianizes to v - u") {
  const Alphabet al({"a", "u", "v"});
  const Word w = log_edge_relator({"a", "u", "v"}, al);
  CHECK(format_word(w, al) == "a v a^-1 u^-1");
  CHECK(oracle::abelianize(w, 3) == std::vector<Weight>{0, -1, 1});
}

TEST_CASE("LOG shape metadata") {
  CHECK(log_shape({{"a", "b", "c"}, {{"a", "b", "c"}, {"b", "c", "a"}}}) == LogShape::Tree);
  CHECK(log_shape({{"a", "b", "c", "d"}, {{"a", "b", "c"}}}) == LogShape::Forest);
  CHECK(log_shape({{"a", "b", "c"}, {{"a", "b", "c"}, {"b", "c", "a"}, {"c", "a", "b"}}}) == LogShape::General);
  const auto c = parse_spec("generators a b c\nedge label=a from=b to=c\nedge label=b from=c to=a\nedge label=c from=a to=b\n");
  CHECK(c.squares.size() == 3);
}

TEST_CASE("build_lot_family") {
  const auto c4 = build_lot_family(4, "a");
  CHECK(boundaries(c4) == std::vector<std::string>{"a1 a0 a1^-1 a4^-1", "a2 a1 a2^-1 a4^-1", "a3 a2 a3^-1 a4^-1",
                                                   "a0 a4 a0^-1 a3^-1"});
  CHECK(c4.alphabet.size() == 5);
  const auto c5 = build_lot_family(5, "a");
  CHECK(c5.squares.size() == 5);
  CHECK(c5.alphabet.size() == 6);
  CHECK(boundaries(c5).back() == "a0 a5 a0^-1 a4^-1");
  for (const auto& s : c5.squares) CHECK(conjugating_generator(s).has_value());
  CHECK_THROWS_AS(build_lot_family(3, "a"), Unsupported);
  CHECK(boundaries(build_lot_family(4, "b")).front() == "b1 b0 b1^-1 b4^-1");
}

TEST_CASE("named complexes") {
  CHECK(build_named("lot-a").squares.size() == 4);
  const auto g1 = build_named("g1");
  CHECK(g1.squares.size() == 9);
  CHECK(g1.alphabet.size() == 10);
  const auto gf = build_named("gf");
  CHECK(boundaries(gf) == std::vector<std::string>{"b2 a1 b2^-1 a4^-1", "b3 a2 b3^-1 a4^-1", "b1 a4 b1^-1 a3^-1",
                                                   "a2 b1 a2^-1 b4^-1", "a3 b2 a3^-1 b4^-1", "a1 b4 a1^-1 b3^-1"});
  const auto g2 = build_named("g2");
  CHECK(g2.squares.size() == 7);
  CHECK(boundaries(g2).back() == "a4 b1 a1^-1 b4^-1");
  CHECK(boundaries(build_named("torus")) == std::vector<std::string>{"a b a^-1 b^-1"});
  CHECK_THROWS_AS(build_named("klein"), InputError);
}

TEST_CASE("combine") {
  const auto lota = build_named("lot-a"), lotb = build_named("lot-b");
  const auto g1 = combine(lota, lotb, "a0 b2 a1^-1 b0^-1");
  const auto named = build_named("g1");
  CHECK(g1.squares == named.squares);
  CHECK(g1.alphabet == named.alphabet);
  CHECK(g1.squares.size() == lota.squares.size() + lotb.squares.size() + 1);
  CHECK_THROWS_AS(combine(lota, lotb, "a0 b2 a1^-1 c0^-1"), InputError);
  CHECK_THROWS_AS(combine(lota, lota, "a0 a2 a1^-1 a0^-1"), InputError);  // alphabet collision
  CHECK_THROWS_AS(combine(lota, lotb, "a0 b2 a1^-1"), InputError);
  CHECK_THROWS_AS(combine(lota, lotb, "a0 b2 b2^-1 b0^-1"), InputError);
  const auto mixed = combine(build_lot_family(5, "a"), build_lot_family(6, "b"), "a0 b2 a1^-1 b0^-1");
  CHECK(mixed.squares.size() == 12);
}

TEST_CASE("add_square") {
  const auto g2 = add_square(build_named("gf"), "a4 b1 a1^-1 b4^-1");
  CHECK(g2.squares == build_named("g2").squares);
  const auto t = build_named("torus");
  const auto twice = add_square(add_square(t, "a b a^-1 b^-1"), "a b a^-1 b^-1");
  CHECK(twice.squares.size() == 3);
  CHECK(duplicate_squares(twice) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}});
  bool flagged = false;
  for (const auto& p : twice.provenance) flagged |= p.find("duplicates") != std::string::npos;
  CHECK(flagged);
  CHECK_THROWS_AS(add_square(t, "a b a^-1"), InputError);
  for (std::size_t i = 0; i < twice.squares.size(); ++i) CHECK(twice.squares[i].id == i);
}

TEST_CASE("render / parse round trip") {
  for (const auto& name : named_complexes()) {
    const auto c = build_named(name);
    CHECK(parse_spec(render(c)) == c);
  }
  const auto dup = add_square(build_named("torus"), "a b a^-1 b^-1");
  CHECK(parse_spec(render(dup)) == dup);
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto c = oracle::random_complex(rng, 3, 1 + static_cast<std::size_t>(i % 5));
    CHECK(parse_spec(render(c)) == c);
  }
}
