#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qgame/errors.hpp"
#include "qgame/game_core.hpp"
#include "qgame/spec_io.hpp"
#include "test_support.hpp"

using namespace qgame;

namespace {

std::string pappa_json() { return game_spec_to_json(pappa_spec()); }

}  // namespace

TEST_CASE("round-trip through JSON") {
  const GameSpecDocument doc = pappa_spec();
  CHECK(parse_game_spec(game_spec_to_json(doc)) == doc);
  CHECK(doc.params == qgame::testing::pappa_params());
}

TEST_CASE("parser rejects malformed documents") {
  CHECK_THROWS_AS(parse_game_spec("not json"), ParseError);
  CHECK_THROWS_AS(parse_game_spec("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_game_spec("{}"), ParseError);  // missing params

  auto doc = nlohmann::json::parse(pappa_json());

  auto missing = doc;
  missing["params"].erase("s14");
  CHECK_THROWS_AS(parse_game_spec(missing.dump()), ParseError);

  auto extra = doc;
  extra["params"]["s4"] = "0";  // dependent entry, not a free parameter
  CHECK_THROWS_AS(parse_game_spec(extra.dump()), ParseError);

  auto unknown = doc;
  unknown["bogus"] = 1;
  CHECK_THROWS_AS(parse_game_spec(unknown.dump()), ParseError);

  auto bad = doc;
  bad["params"]["s1"] = "x/y";
  CHECK_THROWS_AS(parse_game_spec(bad.dump()), ParseError);
}

TEST_CASE("fraction parsing accepts integers and fractions") {
  CHECK(parse_fraction("3") == 3);
  CHECK(parse_fraction("-3/4") == Rational(-3, 4));
  CHECK_THROWS(parse_fraction("1/0"));
  CHECK_THROWS(parse_fraction("0.5"));
}

TEST_CASE("shipped pappa spec equals the builtin, field for field") {
  const char* source_dir = std::getenv("QGAME_SOURCE_DIR");
  const std::string root = source_dir ? source_dir : ".";
  const auto shipped = load_game_spec(root + "/specs/pappa.json");
  CHECK(shipped == pappa_spec());
}

TEST_CASE("sampling") {
  SUBCASE("samples are valid, fairness-exact games") {
    const auto specs = sample_games(25, 42);
    REQUIRE(specs.size() == 25);
    for (const auto& spec : specs) {
      CHECK(check_fairness_constraint(spec.params) == 0);
      for (const auto& v : check_conflict_conditions(spec.params)) CHECK(v.holds());
    }
  }
  SUBCASE("deterministic for a fixed seed") {
    CHECK(sample_games(5, 7) == sample_games(5, 7));
  }
  SUBCASE("infeasible ranges exhaust the budget") {
    SampleOptions options;
    options.max_numerator = 0;  // forces the all-zero boundary game
    options.attempt_budget = 1000;
    CHECK_THROWS_AS(sample_games(1, 1, options), SamplingExhausted);
  }
}
