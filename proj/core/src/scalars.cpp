#include "bosonhopf/scalars.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bosonhopf {

QValue::QValue(double q) : q_(q) {
  if (!(q > 0.0)) throw std::invalid_argument("q must be positive, got " + std::to_string(q));
  if (q == 1.0) throw std::invalid_argument("q = 1 is not a generic deformation parameter");
}

bool QValue::valid(double q) { return q > 0.0 && q != 1.0; }

double q_bracket(double x, QValue q) {
  // sinh form avoids cancellation for q near 1
  const double h = std::log(q.value());
  return std::sinh(x * h) / std::sinh(h);
}

Complex phase_pow(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  const double twice = 2.0 * r;
  if (twice == std::floor(twice)) {
    switch (static_cast<int>(twice)) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
      default: return {1.0, 0.0};
    }
  }
  return std::polar(1.0, std::numbers::pi * r);
}

Complex base_bracket(int m, Complex x) {
  if (x == Complex(0.0) || x == Complex(1.0) || x == Complex(-1.0))
    throw std::invalid_argument("bracket base must differ from 0 and +-1");
  const Complex den = x - 1.0 / x;
  if (std::abs(den) == 0.0) throw std::invalid_argument("bracket base makes x - 1/x vanish");
  return (std::pow(x, m) - std::pow(x, -m)) / den;
}

Complex bracket_factorial(int l, Complex x) {
  if (l < 0) throw std::invalid_argument("bracket_factorial needs l >= 0");
  if (x == Complex(0.0) || x == Complex(1.0) || x == Complex(-1.0))
    throw std::invalid_argument("bracket base must differ from 0 and +-1");
  Complex acc{1.0, 0.0};
  for (int m = 1; m <= l; ++m) acc *= base_bracket(m, x);
  return acc;
}

}  // namespace bosonhopf
