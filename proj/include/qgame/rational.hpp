#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qgame {

using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "-3", "3/4", "-3/4". Throws std::invalid_argument on anything else.
Rational parse_fraction(const std::string& text);

// "3/4" when the denominator is not 1, plain integer otherwise.
std::string format_fraction(const Rational& r);

double to_double(const Rational& r);

// Exact value a + b*sqrt(2). Quantum optima (Eqs. of the fair equilibrium
// family) live in this ring when the utilities are rational.
struct RootTwo {
  Rational a;
  Rational b;

  double value() const;
  // "(p + q*sqrt(2))/r" over a common denominator r.
  std::string str() const;
};

}  // namespace qgame
