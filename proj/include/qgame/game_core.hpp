#pragma once

#include <array>
#include <utility>

#include "qgame/rational.hpp"

namespace qgame {

enum class PlayerId { A, B };

// Private type bit of each player. The prior over the four type profiles is
// uniform, P(x) = 1/4.
struct TypeProfile {
  int alice = 0;
  int bob = 0;
};

struct ActionProfile {
  int alice = 0;
  int bob = 0;
};

inline Rational type_prior() { return Rational(1, 4); }

// The ten free utility parameters. Everything else in the 16-cell table is
// determined by the symmetry and Bell-coupling identities.
struct GameParams {
  Rational s1, s2, s3, s5, s6, s7, s8, s9, s13, s14;

  bool operator==(const GameParams&) const = default;
};

// Full 16-cell table of (u_A, u_B) = (s_i, t_i) pairs. The label i = 1..16
// runs over type blocks (x_A, x_B) in order (0,0),(0,1),(1,0),(1,1), with
// actions (y_A, y_B) in the same order inside each block, matching the
// expansion F_A = (s1 p(00|00) + s2 p(01|00) + ...)/4.
struct UtilityTable {
  std::array<std::pair<Rational, Rational>, 16> cells;

  static int cell_index(TypeProfile x, ActionProfile y) {
    return 4 * (2 * x.alice + x.bob) + (2 * y.alice + y.bob);
  }

  // 1-based accessors matching the printed s_i / t_i labels.
  const Rational& s(int i) const { return cells[i - 1].first; }
  const Rational& t(int i) const { return cells[i - 1].second; }
  Rational& s(int i) { return cells[i - 1].first; }
  Rational& t(int i) { return cells[i - 1].second; }

  bool operator==(const UtilityTable&) const = default;
};

// One strict inequality, evaluated exactly. margin = lhs - rhs for ">" lines.
struct InequalityVerdict {
  Rational margin;
  bool holds() const { return margin > 0; }
  bool boundary() const { return margin == 0; }
};

struct ConstraintReport {
  bool symmetry_ok = false;
  std::array<Rational, 11> bell_coupling_residuals{};
  std::array<InequalityVerdict, 8> conflict_inequalities{};
  Rational fairness_residual;

  bool coupling_ok() const {
    for (const auto& r : bell_coupling_residuals)
      if (r != 0) return false;
    return true;
  }
  bool conflict_ok() const {
    for (const auto& v : conflict_inequalities)
      if (!v.holds()) return false;
    return true;
  }
};

// Fills the dependent cells from the ten free parameters: s4 = s1,
// s10 = -2s1+s2+s3+s5-s7+s9, s11 = -2s1+s2+s3+s5-s6+s9, s12 = s5-s8+s9,
// s15 = 2s1-s2-s3+2s13-s14, s16 = s13 and all t_i by player symmetry.
UtilityTable build_utility_table(const GameParams& params);

// Inverse of build_utility_table. Throws InconsistentTable if the table does
// not lie on the constrained variety (some symmetry or coupling identity
// fails).
GameParams params_from_table(const UtilityTable& table);

// u_A(x_A,x_B,y_A,y_B) == u_B(x_B,x_A,y_B,y_A) for all 16 cells.
bool check_player_symmetry(const UtilityTable& table);

// lhs - rhs of the 11 Bell-coupling identities; all zero iff the total payoff
// reduces to the CHSH combination of probabilities.
std::array<Rational, 11> check_bell_coupling(const UtilityTable& table);

// The eight strict inequalities certifying a conflicting-interest game
// (the second and seventh lines coincide in the printed system and are
// evaluated as printed).
std::array<InequalityVerdict, 8> check_conflict_conditions(const GameParams& params);

// 2s1 - s2 - s3 - s5 + s6 + s7 - s8; zero iff both quantum payoffs coincide.
Rational check_fairness_constraint(const GameParams& params);

Rational utility(const UtilityTable& table, TypeProfile x, ActionProfile y, PlayerId who);

ConstraintReport make_constraint_report(const GameParams& params);

}  // namespace qgame
