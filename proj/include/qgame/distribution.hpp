#pragma once

#include <array>
#include <cmath>
#include <type_traits>

#include "qgame/game_core.hpp"
#include "qgame/rational.hpp"

namespace qgame {

inline constexpr double kValidationTolerance = 1e-12;

// p(y_A,y_B | x_A,x_B). Stored as p[x][y] with x = 2*x_A + x_B and
// y = 2*y_A + y_B, matching the serialization order x in {00,01,10,11}
// by y in {00,01,10,11}. Entries are exact rationals on the classical side
// and doubles on the quantum side.
template <class T>
struct ConditionalDistribution {
  std::array<std::array<T, 4>, 4> p{};

  static int type_index(TypeProfile x) { return 2 * x.alice + x.bob; }
  static int action_index(ActionProfile y) { return 2 * y.alice + y.bob; }

  T& at(TypeProfile x, ActionProfile y) { return p[type_index(x)][action_index(y)]; }
  const T& at(TypeProfile x, ActionProfile y) const {
    return p[type_index(x)][action_index(y)];
  }

  bool operator==(const ConditionalDistribution&) const = default;
};

using RationalDistribution = ConditionalDistribution<Rational>;
using RealDistribution = ConditionalDistribution<double>;

// <A_i B_j> with outcomes encoded as +-1 = 2y - 1; i, j are the types.
template <class T>
struct CorrelationVector {
  std::array<std::array<T, 2>, 2> e{};
};

namespace detail {

template <class T>
bool is_zero(const T& v, double tol) {
  if constexpr (std::is_same_v<T, Rational>) {
    (void)tol;
    return v == 0;
  } else {
    return std::abs(v) <= tol;
  }
}

}  // namespace detail

// Normalization over actions for each type profile plus both no-signalling
// marginal families. Exact for rational entries, tolerance 1e-12 for doubles.
template <class T>
bool validate_distribution(const ConditionalDistribution<T>& d,
                           double tol = kValidationTolerance) {
  for (int x = 0; x < 4; ++x) {
    T sum = d.p[x][0] + d.p[x][1] + d.p[x][2] + d.p[x][3];
    if (!detail::is_zero<T>(sum - T(1), tol)) return false;
    for (int y = 0; y < 4; ++y) {
      if constexpr (std::is_same_v<T, Rational>) {
        if (d.p[x][y] < 0 || d.p[x][y] > 1) return false;
      } else {
        if (d.p[x][y] < -tol || d.p[x][y] > 1 + tol) return false;
      }
    }
  }
  // Alice's marginal must not depend on x_B, Bob's not on x_A.
  for (int ya = 0; ya < 2; ++ya) {
    for (int xa = 0; xa < 2; ++xa) {
      T m0{}, m1{};
      for (int yb = 0; yb < 2; ++yb) {
        m0 += d.at({xa, 0}, {ya, yb});
        m1 += d.at({xa, 1}, {ya, yb});
      }
      if (!detail::is_zero<T>(m0 - m1, tol)) return false;
    }
  }
  for (int yb = 0; yb < 2; ++yb) {
    for (int xb = 0; xb < 2; ++xb) {
      T m0{}, m1{};
      for (int ya = 0; ya < 2; ++ya) {
        m0 += d.at({0, xb}, {ya, yb});
        m1 += d.at({1, xb}, {ya, yb});
      }
      if (!detail::is_zero<T>(m0 - m1, tol)) return false;
    }
  }
  return true;
}

template <class T>
CorrelationVector<T> correlators(const ConditionalDistribution<T>& d) {
  CorrelationVector<T> c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c.e[i][j] = d.at({i, j}, {0, 0}) + d.at({i, j}, {1, 1}) -
                  d.at({i, j}, {0, 1}) - d.at({i, j}, {1, 0});
  return c;
}

// The four signed CHSH combinations, minus sign on E11, E01, E10, E00 in that
// order. Callers compare |value| to 2.
template <class T>
std::array<T, 4> bell_values(const ConditionalDistribution<T>& d) {
  const auto c = correlators(d);
  const T& e00 = c.e[0][0];
  const T& e01 = c.e[0][1];
  const T& e10 = c.e[1][0];
  const T& e11 = c.e[1][1];
  return {e00 + e10 + e01 - e11,
          e10 + e00 + e11 - e01,
          e01 + e11 + e00 - e10,
          e11 + e01 + e10 - e00};
}

}  // namespace qgame
