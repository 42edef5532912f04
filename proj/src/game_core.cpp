#include "qgame/game_core.hpp"

#include "qgame/errors.hpp"

namespace qgame {

UtilityTable build_utility_table(const GameParams& p) {
  UtilityTable t{};
  const Rational bell = -2 * p.s1 + p.s2 + p.s3;  // recurring combination

  // x_A = 0, x_B = 0 block (i = 1..4)
  t.s(1) = p.s1;   t.t(1) = p.s1;
  t.s(2) = p.s2;   t.t(2) = p.s3;
  t.s(3) = p.s3;   t.t(3) = p.s2;
  t.s(4) = p.s1;   t.t(4) = p.s1;
  // x_A = 0, x_B = 1 block (i = 5..8)
  t.s(5) = p.s5;   t.t(5) = p.s9;
  t.s(6) = p.s6;   t.t(6) = bell + p.s5 - p.s6 + p.s9;
  t.s(7) = p.s7;   t.t(7) = bell + p.s5 - p.s7 + p.s9;
  t.s(8) = p.s8;   t.t(8) = p.s5 - p.s8 + p.s9;
  // x_A = 1, x_B = 0 block (i = 9..12)
  t.s(9) = p.s9;                          t.t(9) = p.s5;
  t.s(10) = bell + p.s5 - p.s7 + p.s9;    t.t(10) = p.s7;
  t.s(11) = bell + p.s5 - p.s6 + p.s9;    t.t(11) = p.s6;
  t.s(12) = p.s5 - p.s8 + p.s9;           t.t(12) = p.s8;
  // x_A = 1, x_B = 1 block (i = 13..16)
  t.s(13) = p.s13;                        t.t(13) = p.s13;
  t.s(14) = p.s14;                        t.t(14) = -bell + 2 * p.s13 - p.s14;
  t.s(15) = -bell + 2 * p.s13 - p.s14;    t.t(15) = p.s14;
  t.s(16) = p.s13;                        t.t(16) = p.s13;
  return t;
}

GameParams params_from_table(const UtilityTable& table) {
  const GameParams params{table.s(1), table.s(2), table.s(3),  table.s(5),
                          table.s(6), table.s(7), table.s(8),  table.s(9),
                          table.s(13), table.s(14)};
  const UtilityTable rebuilt = build_utility_table(params);
  for (int i = 1; i <= 16; ++i) {
    if (rebuilt.s(i) != table.s(i) || rebuilt.t(i) != table.t(i))
      throw InconsistentTable("cell " + std::to_string(i) +
                              " violates a symmetry or Bell-coupling identity");
  }
  return params;
}

bool check_player_symmetry(const UtilityTable& table) {
  for (int xa = 0; xa < 2; ++xa)
    for (int xb = 0; xb < 2; ++xb)
      for (int ya = 0; ya < 2; ++ya)
        for (int yb = 0; yb < 2; ++yb) {
          const auto& lhs = table.cells[UtilityTable::cell_index({xa, xb}, {ya, yb})];
          const auto& rhs = table.cells[UtilityTable::cell_index({xb, xa}, {yb, ya})];
          if (lhs.first != rhs.second) return false;
        }
  return true;
}

std::array<Rational, 11> check_bell_coupling(const UtilityTable& ut) {
  auto s = [&](int i) { return ut.s(i); };
  auto t = [&](int i) { return ut.t(i); };
  const Rational head = s(1) - s(2) + t(1) - t(2);
  return {
      head - (s(5) - s(6) + t(5) - t(6)),
      head - (s(9) - s(10) + t(9) - t(10)),
      head - (s(14) - s(13) + t(14) - t(13)),
      s(4) - s(1) + t(4) - t(1),
      s(3) - s(2) + t(3) - t(2),
      s(8) - s(5) + t(8) - t(5),
      s(7) - s(6) + t(7) - t(6),
      s(12) - s(9) + t(12) - t(9),
      s(11) - s(10) + t(11) - t(10),
      s(16) - s(13) + t(16) - t(13),
      s(14) - s(15) + t(14) - t(15),
  };
}

std::array<InequalityVerdict, 8> check_conflict_conditions(const GameParams& p) {
  // The second and seventh lines coincide in the printed system.
  return {{
      {2 * p.s2 + 2 * p.s3 + p.s8 + p.s14 - (4 * p.s1 + p.s7 + p.s13)},
      {p.s2 + p.s5 - (p.s1 + p.s7)},
      {3 * p.s2 + 2 * p.s3 + p.s5 + p.s8 + p.s14 - (5 * p.s1 + 2 * p.s7 + p.s13)},
      {p.s3 + p.s7 - (p.s1 + p.s5)},
      {p.s3 + p.s6 + p.s7 + p.s14 - (p.s1 + 2 * p.s5 + p.s13)},
      {p.s6 + p.s14 - (p.s5 + p.s13)},
      {p.s2 + p.s5 - (p.s1 + p.s7)},
      {p.s2 + p.s3 - 2 * p.s1},
  }};
}

Rational check_fairness_constraint(const GameParams& p) {
  return 2 * p.s1 - p.s2 - p.s3 - p.s5 + p.s6 + p.s7 - p.s8;
}

Rational utility(const UtilityTable& table, TypeProfile x, ActionProfile y, PlayerId who) {
  const auto& cell = table.cells[UtilityTable::cell_index(x, y)];
  return who == PlayerId::A ? cell.first : cell.second;
}

ConstraintReport make_constraint_report(const GameParams& params) {
  const UtilityTable table = build_utility_table(params);
  ConstraintReport report;
  report.symmetry_ok = check_player_symmetry(table);
  report.bell_coupling_residuals = check_bell_coupling(table);
  report.conflict_inequalities = check_conflict_conditions(params);
  report.fairness_residual = check_fairness_constraint(params);
  return report;
}

}  // namespace qgame
