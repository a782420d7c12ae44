#pragma once

#include <complex>

namespace bosonhopf {

using Complex = std::complex<double>;

// Deformation parameter; generic q only (q > 0, q != 1).
class QValue {
public:
  explicit QValue(double q);
  double value() const { return q_; }

  static bool valid(double q);

private:
  double q_;
};

// [x]_q = (q^x - q^-x) / (q - q^-1)
double q_bracket(double x, QValue q);

// exp(i pi x), exact at multiples of 1/2
Complex phase_pow(double x);

// [m]_x for a complex base
Complex base_bracket(int m, Complex x);

// prod_{m=1}^{l} [m]_x
Complex bracket_factorial(int l, Complex x);

}  // namespace bosonhopf
