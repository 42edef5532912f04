#include "qgame/classical.hpp"

#include "qgame/errors.hpp"

namespace qgame {

DeterministicStrategy candidate_strategy() {
  return DeterministicStrategy{{0, 0}, {1, 0}};  // y_A = 0, y_B = 1 - x_B
}

DeterministicStrategy swap_players(const DeterministicStrategy& s) {
  return DeterministicStrategy{s.bob, s.alice};
}

std::array<DeterministicStrategy, 16> enumerate_deterministic_strategies() {
  std::array<DeterministicStrategy, 16> out{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      out[a * 4 + b] = DeterministicStrategy{{a / 2, a % 2}, {b / 2, b % 2}};
  return out;
}

RationalDistribution deterministic_distribution(const DeterministicStrategy& s) {
  RationalDistribution d;
  for (int xa = 0; xa < 2; ++xa)
    for (int xb = 0; xb < 2; ++xb)
      d.at({xa, xb}, {s.alice[xa], s.bob[xb]}) = 1;
  return d;
}

RationalDistribution lhv_distribution(const LocalHiddenVariableModel& m) {
  Rational total = 0;
  RationalDistribution d;
  for (const auto& [weight, strategy] : m.weights) {
    if (weight < 0) throw BadMixture("negative mixture weight");
    total += weight;
    const RationalDistribution atom = deterministic_distribution(strategy);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) d.p[x][y] += weight * atom.p[x][y];
  }
  if (total != 1) throw BadMixture("mixture weights sum to " + format_fraction(total));
  return d;
}

namespace {

std::pair<Rational, Rational> pure_payoffs(const UtilityTable& table,
                                           const DeterministicStrategy& s) {
  Rational fa = 0, fb = 0;
  for (int xa = 0; xa < 2; ++xa)
    for (int xb = 0; xb < 2; ++xb) {
      const auto& cell =
          table.cells[UtilityTable::cell_index({xa, xb}, {s.alice[xa], s.bob[xb]})];
      fa += cell.first;
      fb += cell.second;
    }
  return {fa / 4, fb / 4};
}

}  // namespace

std::vector<NashResult> find_pure_nash(const UtilityTable& table) {
  // The bound is defined only on the 2s1 < s2 + s3 side.
  Rational bound;
  bool bound_known = false;
  try {
    bound = classical_total_payoff_bound(params_from_table(table));
    bound_known = true;
  } catch (const SignAssumptionViolated&) {
  } catch (const InconsistentTable&) {
  }

  std::vector<NashResult> results;
  results.reserve(16);
  for (const auto& s : enumerate_deterministic_strategies()) {
    const auto [fa, fb] = pure_payoffs(table, s);
    NashResult r;
    r.strategy = s;
    r.payoff_a = fa;
    r.payoff_b = fb;
    r.is_equilibrium = true;
    for (int a = 0; a < 4; ++a) {
      DeterministicStrategy dev = s;
      dev.alice = {a / 2, a % 2};
      if (dev == s) continue;
      const auto [da, db] = pure_payoffs(table, dev);
      if (da > fa) r.is_equilibrium = false;
      if (da == fa) r.is_degenerate = true;
    }
    for (int b = 0; b < 4; ++b) {
      DeterministicStrategy dev = s;
      dev.bob = {b / 2, b % 2};
      if (dev == s) continue;
      const auto [da, db] = pure_payoffs(table, dev);
      if (db > fb) r.is_equilibrium = false;
      if (db == fb) r.is_degenerate = true;
    }
    r.is_fair = fa == fb;
    r.saturates_bell_bound = bound_known && fa + fb == bound;
    results.push_back(r);
  }
  return results;
}

std::array<InequalityVerdict, 8> candidate_equilibrium_conditions(const GameParams& params) {
  const UtilityTable ut = build_utility_table(params);
  auto s = [&](int i) { return ut.s(i); };
  auto t = [&](int i) { return ut.t(i); };
  const Rational sa = s(2) + s(5) + s(10) + s(13);  // Alice at the candidate
  const Rational tb = t(2) + t(5) + t(10) + t(13);  // Bob at the candidate
  return {{
      {sa - (s(2) + s(5) + s(12) + s(15))},
      {sa - (s(4) + s(7) + s(10) + s(13))},
      {sa - (s(4) + s(7) + s(12) + s(15))},
      {tb - (t(1) + t(5) + t(9) + t(13))},
      {tb - (t(1) + t(6) + t(9) + t(14))},
      {tb - (t(2) + t(6) + t(10) + t(14))},
      {sa - tb},
      {-(s(1) - s(2) + t(1) - t(2))},
  }};
}

bool check_candidate_equilibrium(const GameParams& params) {
  for (const auto& v : candidate_equilibrium_conditions(params))
    if (!v.holds()) return false;
  return true;
}

BellAffine total_payoff_as_bell_affine(const GameParams& p) {
  return {(2 * p.s1 - p.s2 - p.s3) / 8,
          (p.s2 + p.s3 + 2 * p.s5 + 2 * p.s9 + 2 * p.s13) / 4};
}

Rational classical_total_payoff_bound(const GameParams& p) {
  if (2 * p.s1 >= p.s2 + p.s3)
    throw SignAssumptionViolated("2s1 >= s2 + s3: the Bell bound direction flips");
  const auto [alpha, beta] = total_payoff_as_bell_affine(p);
  return -2 * alpha + beta;
}

}  // namespace qgame
