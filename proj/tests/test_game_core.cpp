#include <doctest.h>

#include <random>

#include "qgame/errors.hpp"
#include "qgame/game_core.hpp"
#include "test_support.hpp"

using namespace qgame;
using qgame::testing::pappa_params;
using qgame::testing::random_params;

namespace {

GameParams combine(const Rational& a, const GameParams& p, const Rational& b,
                   const GameParams& q) {
  return GameParams{a * p.s1 + b * q.s1,   a * p.s2 + b * q.s2,
                    a * p.s3 + b * q.s3,   a * p.s5 + b * q.s5,
                    a * p.s6 + b * q.s6,   a * p.s7 + b * q.s7,
                    a * p.s8 + b * q.s8,   a * p.s9 + b * q.s9,
                    a * p.s13 + b * q.s13, a * p.s14 + b * q.s14};
}

// The eight conflict inequalities, transcribed independently of the checker.
bool conflict_oracle(const GameParams& p) {
  return 2 * p.s2 + 2 * p.s3 + p.s8 + p.s14 > 4 * p.s1 + p.s7 + p.s13 &&
         p.s2 + p.s5 > p.s1 + p.s7 &&
         3 * p.s2 + 2 * p.s3 + p.s5 + p.s8 + p.s14 > 5 * p.s1 + 2 * p.s7 + p.s13 &&
         p.s3 + p.s7 > p.s1 + p.s5 &&
         p.s3 + p.s6 + p.s7 + p.s14 > p.s1 + 2 * p.s5 + p.s13 &&
         p.s6 + p.s14 > p.s5 + p.s13 &&
         p.s2 + p.s5 > p.s1 + p.s7 &&
         2 * p.s1 < p.s2 + p.s3;
}

}  // namespace

TEST_CASE("pappa instance reproduces the full published table") {
  const UtilityTable t = build_utility_table(pappa_params());
  const Rational h(1, 2), q3(3, 4);
  const Rational s[17] = {0, 0, 1, h, 0, 0, 1, h, 0, 0, 1, h, 0, q3, 0, 0, q3};
  const Rational tt[17] = {0, 0, h, 1, 0, 0, h, 1, 0, 0, h, 1, 0, q3, 0, 0, q3};
  for (int i = 1; i <= 16; ++i) {
    CAPTURE(i);
    CHECK(t.s(i) == s[i]);
    CHECK(t.t(i) == tt[i]);
  }
}

TEST_CASE("all-zero parameters give the zero table") {
  const UtilityTable t = build_utility_table(GameParams{});
  for (int i = 1; i <= 16; ++i) {
    CHECK(t.s(i) == 0);
    CHECK(t.t(i) == 0);
  }
}

TEST_CASE("s1 = 1, others 0") {
  GameParams p{};
  p.s1 = 1;
  const UtilityTable t = build_utility_table(p);
  CHECK(t.s(10) == -2);
  CHECK(t.s(11) == -2);
  CHECK(t.s(15) == 2);
  CHECK(t.s(4) == 1);
  CHECK(t.t(1) == 1);
  CHECK(t.t(4) == 1);
}

TEST_CASE("params_from_table inverts the construction") {
  CHECK(params_from_table(build_utility_table(pappa_params())) == pappa_params());

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const GameParams p = random_params(rng);
    CHECK(params_from_table(build_utility_table(p)) == p);
  }

  UtilityTable broken = build_utility_table(pappa_params());
  broken.s(4) = broken.s(1) + 1;
  CHECK_THROWS_AS(params_from_table(broken), InconsistentTable);
}

TEST_CASE("player symmetry") {
  CHECK(check_player_symmetry(build_utility_table(pappa_params())));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i)
    CHECK(check_player_symmetry(build_utility_table(random_params(rng))));

  UtilityTable broken = build_utility_table(pappa_params());
  broken.t(3) += 1;  // breaks s2 = t3
  CHECK_FALSE(check_player_symmetry(broken));
}

TEST_CASE("bell coupling residuals") {
  for (const auto& r : check_bell_coupling(build_utility_table(pappa_params())))
    CHECK(r == 0);

  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i)
    for (const auto& r : check_bell_coupling(build_utility_table(random_params(rng))))
      CHECK(r == 0);

  UtilityTable broken = build_utility_table(pappa_params());
  broken.s(16) = broken.s(13) + 1;
  const auto residuals = check_bell_coupling(broken);
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    CAPTURE(i);
    if (i == 9)  // s16 - s13 + t16 - t13
      CHECK(residuals[i] == 1);
    else
      CHECK(residuals[i] == 0);
  }
}

TEST_CASE("conflict conditions") {
  SUBCASE("pappa: all eight strict") {
    for (const auto& v : check_conflict_conditions(pappa_params())) {
      CHECK(v.holds());
      CHECK_FALSE(v.boundary());
    }
  }
  SUBCASE("zero params: all fail on the boundary") {
    for (const auto& v : check_conflict_conditions(GameParams{})) {
      CHECK_FALSE(v.holds());
      CHECK(v.boundary());
    }
  }
  SUBCASE("a sampler-found valid instance") {
    const GameParams p{Rational(0), Rational(2), Rational(1), Rational(0), Rational(2),
                       Rational(1), Rational(1), Rational(0), Rational(0), Rational(3)};
    REQUIRE(conflict_oracle(p));
    for (const auto& v : check_conflict_conditions(p)) CHECK(v.holds());
  }
  SUBCASE("checker agrees with the transcribed inequalities") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
      const GameParams p = random_params(rng);
      bool all = true;
      for (const auto& v : check_conflict_conditions(p)) all = all && v.holds();
      CHECK(all == conflict_oracle(p));
    }
  }
}

TEST_CASE("fairness constraint") {
  CHECK(check_fairness_constraint(pappa_params()) == 0);
  CHECK(check_fairness_constraint(GameParams{}) == 0);

  GameParams p = pappa_params();
  p.s6 = 2;
  CHECK(check_fairness_constraint(p) == 1);

  // Linearity in the parameters.
  std::mt19937_64 rng(19);
  const GameParams a = random_params(rng), b = random_params(rng);
  const GameParams mix = combine(Rational(2), a, Rational(-3), b);
  CHECK(check_fairness_constraint(mix) ==
        2 * check_fairness_constraint(a) - 3 * check_fairness_constraint(b));
}

TEST_CASE("utility lookups") {
  const UtilityTable t = build_utility_table(pappa_params());
  CHECK(utility(t, {0, 0}, {0, 1}, PlayerId::A) == 1);              // s2
  CHECK(utility(t, {1, 1}, {0, 0}, PlayerId::B) == Rational(3, 4));  // t13

  for (int xa = 0; xa < 2; ++xa)
    for (int xb = 0; xb < 2; ++xb)
      for (int ya = 0; ya < 2; ++ya)
        for (int yb = 0; yb < 2; ++yb)
          CHECK(utility(t, {xa, xb}, {ya, yb}, PlayerId::A) ==
                utility(t, {xb, xa}, {yb, ya}, PlayerId::B));
}

TEST_CASE("construction is linear in the parameters") {
  std::mt19937_64 rng(23);
  const GameParams p = random_params(rng), q = random_params(rng);
  const Rational a(3, 2), b(-5, 4);
  const UtilityTable lhs = build_utility_table(combine(a, p, b, q));
  const UtilityTable tp = build_utility_table(p), tq = build_utility_table(q);
  for (int i = 1; i <= 16; ++i) {
    CHECK(lhs.s(i) == a * tp.s(i) + b * tq.s(i));
    CHECK(lhs.t(i) == a * tp.t(i) + b * tq.t(i));
  }
}
