#include "qgame/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace qgame {

namespace {

using Int = boost::multiprecision::cpp_int;

Int parse_integer(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("sign without digits: " + text);
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("not an integer: " + text);
  return Int(text);
}

}  // namespace

Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const Int num = parse_integer(text.substr(0, slash));
  const Int den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + text);
  return Rational(num, den);
}

std::string format_fraction(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return static_cast<double>(r); }

double RootTwo::value() const { return to_double(a) + to_double(b) * std::sqrt(2.0); }

std::string RootTwo::str() const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const Int da = denominator(a);
  const Int db = denominator(b);
  const Int common = da * db / gcd(da, db);
  const Int p = numerator(a) * (common / da);
  const Int q = numerator(b) * (common / db);
  const Int q_abs = q >= 0 ? q : Int(-q);
  std::string body = "(" + p.str() + (q >= 0 ? " + " : " - ") + q_abs.str() + "*sqrt(2))";
  if (common == 1) return body;
  return body + "/" + common.str();
}

}  // namespace qgame
