#include <doctest.h>

#include "oracles.hpp"
#include "sqfiber/flatness.hpp"

using namespace sqfiber;

TEST_CASE("disk cells") {
  CHECK(disk_cells(0).empty());
  CHECK(disk_cells(1) == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(disk_cells(2).size() == 9);
  CHECK(disk_cells(3).size() == 25);
  // every cell after the seed shares a side with an earlier one
  const auto cells = disk_cells(4);
  for (std::size_t i = 1; i < cells.size(); ++i) {
    bool touches = false;
    for (std::size_t j = 0; j < i; ++j)
      touches |= std::abs(cells[i].first - cells[j].first) + std::abs(cells[i].second - cells[j].second) == 1;
    CHECK(touches);
  }
}

TEST_CASE("eligible squares") {
  CHECK(eligible_squares(build_named("lot-a")).empty());
  CHECK(eligible_squares(build_named("g1")).empty());
  const auto e2 = eligible_squares(build_named("g2"));
  CHECK(e2.size() == 3);
  CHECK(std::find(e2.begin(), e2.end(), 6) != e2.end());
  CHECK(eligible_squares(build_named("torus")) == std::vector<std::size_t>{0});
}

TEST_CASE("flat disk search") {
  const auto g2 = build_named("g2");
  CHECK_FALSE(search_flat_disk(g2, 2).has_value());
  CHECK_FALSE(search_flat_disk(g2, 3).has_value());
  const auto torus = build_named("torus");
  const auto w = search_flat_disk(torus, 3);
  REQUIRE(w.has_value());
  CHECK(w->cells.size() == 25);
  std::string why;
  CHECK(validate_disk(torus, *w, &why));
  CHECK(why.empty());
  CHECK_FALSE(search_flat_disk(build_named("lot-a"), 1).has_value());
  CHECK_THROWS_AS(search_flat_disk(torus, 0), InputError);
}

TEST_CASE("validator rejects broken witnesses") {
  const auto torus = build_named("torus");
  auto w = *search_flat_disk(torus, 2);
  REQUIRE(validate_disk(torus, w));
  auto rotated = w;
  rotated.cells[3].rot = (rotated.cells[3].rot + 1) % 4;
  CHECK_FALSE(validate_disk(torus, rotated));
  auto missing = w;
  missing.cells.pop_back();
  CHECK_FALSE(validate_disk(torus, missing));
  auto moved = w;
  moved.cells[1].x = moved.cells[0].x;
  moved.cells[1].y = moved.cells[0].y;
  CHECK_FALSE(validate_disk(torus, moved));
}

TEST_CASE("every witness found validates") {
  std::vector<SquareComplex> cases{build_named("torus"), build_named("g2")};
  cases.push_back(parse_spec("generators a b c\nsquare a b a^-1 b^-1\nsquare a c a^-1 c^-1\n"));
  std::mt19937 rng(31);
  for (int i = 0; i < 40; ++i) cases.push_back(oracle::random_complex(rng, 2, 2));
  for (const auto& c : cases) {
    for (int r = 1; r <= 3; ++r) {
      const auto w = search_flat_disk(c, r);
      if (!w) continue;
      std::string why;
      CHECK_MESSAGE(validate_disk(c, *w, &why), why);
      CHECK(w->radius == r);
    }
  }
}

TEST_CASE("no disk at R stays no disk beyond R") {
  std::mt19937 rng(77);
  for (int i = 0; i < 30; ++i) {
    const auto c = oracle::random_complex(rng, 2, 2);
    bool gone = false;
    for (int r = 1; r <= 3; ++r) {
      const bool found = search_flat_disk(c, r).has_value();
      if (gone) CHECK_FALSE(found);
      gone |= !found;
    }
  }
}

TEST_CASE("hyperbolicity verdicts") {
  const auto lot = hyperbolicity_verdict(build_named("lot-a"));
  CHECK(lot.tag == VerdictTag::HyperbolicCertA);
  // CertA soundness: every square owns a poison corner
  std::vector<bool> hit(4, false);
  for (const auto& e : poison_corners(build_named("lot-a"))) hit[e.at.square] = true;
  for (bool h : hit) CHECK(h);

  const auto g2 = hyperbolicity_verdict(build_named("g2"), 3);
  CHECK(g2.tag == VerdictTag::HyperbolicCertB);
  CHECK(g2.radius == 2);
  CHECK_FALSE(g2.witness.has_value());

  const auto torus = hyperbolicity_verdict(build_named("torus"), 3);
  CHECK(torus.tag == VerdictTag::Inconclusive);
  REQUIRE(torus.witness.has_value());
  CHECK(torus.witness->radius == 3);
  CHECK(validate_disk(build_named("torus"), *torus.witness));

  const auto bigon = hyperbolicity_verdict(parse_spec("generators a b\nsquare a b^-1 a b^-1\n"));
  CHECK(bigon.tag == VerdictTag::NotNPC);
  CHECK(to_string(VerdictTag::HyperbolicCertB) == "HyperbolicCertB");
}

TEST_CASE("search is deterministic") {
  const auto torus = build_named("torus");
  CHECK(search_flat_disk(torus, 3) == search_flat_disk(torus, 3));
  const auto two = parse_spec("generators a b c\nsquare a b a^-1 b^-1\nsquare a c a^-1 c^-1\n");
  CHECK(search_flat_disk(two, 3) == search_flat_disk(two, 3));
}
