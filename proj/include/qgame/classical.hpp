#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qgame/distribution.hpp"
#include "qgame/game_core.hpp"
#include "qgame/rational.hpp"

namespace qgame {

// Each player's action as a function of their own type.
struct DeterministicStrategy {
  std::array<int, 2> alice{};  // action for type 0, 1
  std::array<int, 2> bob{};

  int alice_index() const { return 2 * alice[0] + alice[1]; }
  int bob_index() const { return 2 * bob[0] + bob[1]; }
  // Canonical order: alice_index * 4 + bob_index.
  int index() const { return alice_index() * 4 + bob_index(); }

  bool operator==(const DeterministicStrategy&) const = default;
};

// The candidate unfair equilibrium: Alice always plays 0, Bob plays 1 - x_B.
DeterministicStrategy candidate_strategy();

// The player-swapped partner of a strategy pair.
DeterministicStrategy swap_players(const DeterministicStrategy& s);

// All 16 pairs in canonical order.
std::array<DeterministicStrategy, 16> enumerate_deterministic_strategies();

RationalDistribution deterministic_distribution(const DeterministicStrategy& s);

// Finite mixture over deterministic strategies; two bits of shared hidden
// data suffice for this game.
struct LocalHiddenVariableModel {
  std::vector<std::pair<Rational, DeterministicStrategy>> weights;
};

// Throws BadMixture unless weights are nonnegative and sum to 1.
RationalDistribution lhv_distribution(const LocalHiddenVariableModel& m);

// Expected payoffs (F_A, F_B) with the uniform 1/4 type prior.
template <class T>
std::pair<T, T> classical_payoffs(const UtilityTable& table,
                                  const ConditionalDistribution<T>& d) {
  T fa{}, fb{};
  for (int xa = 0; xa < 2; ++xa)
    for (int xb = 0; xb < 2; ++xb)
      for (int ya = 0; ya < 2; ++ya)
        for (int yb = 0; yb < 2; ++yb) {
          const auto& cell = table.cells[UtilityTable::cell_index({xa, xb}, {ya, yb})];
          const T& prob = d.at({xa, xb}, {ya, yb});
          if constexpr (std::is_same_v<T, Rational>) {
            fa += prob * cell.first;
            fb += prob * cell.second;
          } else {
            fa += prob * to_double(cell.first);
            fb += prob * to_double(cell.second);
          }
        }
  if constexpr (std::is_same_v<T, Rational>) {
    return {fa / 4, fb / 4};
  } else {
    return {fa / 4.0, fb / 4.0};
  }
}

struct NashResult {
  DeterministicStrategy strategy;
  Rational payoff_a;
  Rational payoff_b;
  bool is_equilibrium = false;
  // Some unilateral deviation ties the payoff (weak equilibrium).
  bool is_degenerate = false;
  bool is_fair = false;
  bool saturates_bell_bound = false;
};

// Exhaustive check of all 16 pairs against all unilateral deviations.
// Equilibrium means no deviation strictly improves the deviator's payoff.
std::vector<NashResult> find_pure_nash(const UtilityTable& table);

// The eight strict inequalities stating that the candidate strategy is an
// unfair Nash equilibrium, evaluated on the built table's s/t entries.
std::array<InequalityVerdict, 8> candidate_equilibrium_conditions(const GameParams& params);

// True iff all eight hold strictly. Agrees with check_conflict_conditions
// after substituting the table identities.
bool check_candidate_equilibrium(const GameParams& params);

// F_A + F_B = alpha * S + beta for every valid distribution, S the first
// CHSH combination.
struct BellAffine {
  Rational alpha;  // (2s1 - s2 - s3)/8
  Rational beta;   // (s2 + s3 + 2s5 + 2s9 + 2s13)/4
};

BellAffine total_payoff_as_bell_affine(const GameParams& params);

// Maximum of F_A + F_B over Bell-satisfying distributions, -2*alpha + beta.
// Requires 2s1 < s2 + s3; throws SignAssumptionViolated otherwise (the bound
// direction flips).
Rational classical_total_payoff_bound(const GameParams& params);

}  // namespace qgame
