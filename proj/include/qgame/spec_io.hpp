#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgame/game_core.hpp"

namespace qgame {

struct SpecOptions {
  double tolerance = 1e-9;
  double grid_step = M_PI / 32.0;

  bool operator==(const SpecOptions&) const = default;
};

// One game-spec document: a label, the ten free parameters as exact
// fractions, and optional numeric overrides.
struct GameSpecDocument {
  std::string label;
  GameParams params;
  SpecOptions options;

  bool operator==(const GameSpecDocument&) const = default;
};

// Strict parser: all ten parameter keys required, unknown keys rejected.
// Throws ParseError with key diagnostics.
GameSpecDocument parse_game_spec(const std::string& json_text);
GameSpecDocument load_game_spec(const std::string& path);

std::string game_spec_to_json(const GameSpecDocument& doc);

// The particular instance the game family specializes to (Battle of the
// Sexes combined with CHSH).
GameSpecDocument pappa_spec();

struct SampleOptions {
  int max_numerator = 8;      // numerators drawn uniformly from [-max, max]
  std::int64_t denominator = 4;
  std::int64_t attempt_budget = 1'000'000;
};

// Rejection-samples conflicting-interest games on the fairness variety:
// nine parameters are drawn, s8 is solved exactly from the fairness
// constraint, and the eight strict inequalities are rejection-tested.
// Deterministic for a fixed seed; throws SamplingExhausted when the budget
// runs out.
std::vector<GameSpecDocument> sample_games(int count, std::uint64_t seed,
                                           const SampleOptions& options = {});

}  // namespace qgame
