#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bosonhopf/linalg.hpp"

namespace bosonhopf {

enum class Family { B, Bbar, Bq, Bbarq, H };

enum class Basis { unnormalized, unitary };

std::string to_string(Family f);
Family family_from_string(const std::string& name);
bool is_deformed(Family f);
std::string to_string(Basis b);
Basis basis_from_string(const std::string& name);

struct AlgebraSpec {
  Family family = Family::B;
  double alpha = 0, beta = 0;              // B, Bq
  double sigma = 0, tau = 0;               // Bbar, Bbarq
  double delta = 0, nu = 0, rho = 0;       // H
  double q = 0;                            // Bq, Bbarq
  Basis basis = Basis::unnormalized;

  static AlgebraSpec b(double alpha, double beta, Basis basis = Basis::unnormalized);
  static AlgebraSpec bbar(double sigma, double tau, Basis basis = Basis::unnormalized);
  static AlgebraSpec bq(double alpha, double beta, double q, Basis basis = Basis::unnormalized);
  static AlgebraSpec bbarq(double sigma, double tau, double q, Basis basis = Basis::unnormalized);
  static AlgebraSpec h(double delta, double nu, double rho, Basis basis = Basis::unnormalized);
  // rho = -(nu - delta + 1) / (2 delta), where M|m> = m|m>
  static double distinguished_rho(double delta, double nu);

  // Named parameters relevant to the family, e.g. {alpha, beta, q}.
  std::map<std::string, double> parameters() const;
  std::string label() const;

  // Shift s of the primitive variable N~ = n + s (M~ for H).
  double shift() const;
  // The paper's positivity condition for a *-representation.
  bool unitary_allowed() const;
};

// Ladder weight [n] of the family (n >= 1).
double weight(const AlgebraSpec& spec, int n);

class FockRep {
public:
  FockRep(AlgebraSpec spec, int dim);

  const AlgebraSpec& spec() const { return spec_; }
  Family family() const { return spec_.family; }
  int dim() const { return dim_; }

  const Matrix& lowering() const { return lowering_; }
  const Matrix& raising() const { return raising_; }
  // N for the boson families, M for H.
  const Matrix& number() const { return number_; }
  const Matrix& grade_plus() const { return grade_plus_; }
  const Matrix& grade_minus() const { return grade_minus_; }
  bool has_k_op() const { return spec_.family == Family::H; }
  const Matrix& k_op() const;

  // weights()[k] = [k + 1] for k = 0 .. dim-1
  std::span<const double> weights() const { return weights_; }
  double shift() const { return shift_; }
  // f applied to the primitive variable: diag(f(n + shift)).
  Matrix diagonal(const std::function<Complex(double)>& f) const;
  Matrix identity() const { return Matrix::Identity(dim_, dim_); }

private:
  AlgebraSpec spec_;
  int dim_;
  double shift_;
  std::vector<double> weights_;
  Matrix lowering_, raising_, number_, grade_plus_, grade_minus_, k_op_;
};

FockRep build_rep(const AlgebraSpec& spec, int dim);

struct ValidityWindow {
  int raise_degree = 0;
  int kept = 0;  // levels 0 .. kept-1
  Matrix projector;
};

ValidityWindow validity_window(const FockRep& rep, int raise_degree);

}  // namespace bosonhopf
