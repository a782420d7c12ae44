#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bosonhopf/fock.hpp"
#include "bosonhopf/hopf.hpp"
#include "bosonhopf/report.hpp"

namespace bosonhopf {

enum class ElementKind { L, Lplus, M };

struct StructureElement {
  ElementKind kind = ElementKind::L;
  std::array<double, 4> lambda{};  // L, L+: lambda_1 .. lambda_4
  double mu1 = 0, mu2 = 0, rho = 0;  // M
  Matrix matrix;
};

// lambda_2 = -alpha lambda_1 / 2, lambda_3 = lambda_1 (alpha - 2 beta) / 4
std::pair<double, double> solve_lambda_constraints(double alpha, double beta, double lambda1);

// L+ = lambda_1 (a^+ a - alpha/2 N + (alpha/4 - beta/2)) + lambda_4 (-1)^{N~}
StructureElement build_L(const FockRep& rep, double lambda1, double lambda4);
std::vector<CheckReport> check_L_properties(const StructureElement& elem, const HopfTables& tables, double tol);

// C(C + (alpha/2 - beta)) + (alpha/4 - beta/2)^2 - eta/lambda_1^2 with C = a^+ a - alpha/2 N
CheckReport characteristic_identity_residual(const FockRep& rep, double lambda1, double tol);

// M = b^+ b / delta + nu/(2 delta) K + rho
StructureElement build_M(const FockRep& rep);
std::vector<CheckReport> check_M_properties(const FockRep& rep, double tol);

// [a, a^+] = -(2/lambda_1) L + alpha/2
CheckReport bh_form_check(const FockRep& rep, double lambda1, double tol);

enum class Target { osp12, sl2, slq2, ospq12 };
std::string to_string(Target t);

struct RealizationMap {
  Target target = Target::osp12;
  AlgebraSpec spec;
  int dim = 0;
  std::map<std::string, Matrix> images;  // e, f, h and, for sl2 from B/H, e', f', h', J0, J+, J-
  double normalization = 0;              // the fixed product of the two split constants
  std::vector<CheckReport> reports;
};

// Symmetric split c = mu * lambda with mu = sqrt|c| and the sign on lambda.
std::pair<double, double> split_normalization(double c);

RealizationMap build_realization(const FockRep& rep, Target target, double tol = 1e-10);

enum class CasimirKind { osp_i2, sl2_c2 };

double osp_i2(double alpha, double beta);
double sl2_cn(double alpha, double beta, int n);
double sl2_c_even(double alpha, double beta);
double sl2_c_odd(double alpha, double beta);

Matrix casimir_matrix(const RealizationMap& r, CasimirKind which);
CheckReport casimir_spectrum(const RealizationMap& r, CasimirKind which, double tol);

struct IsoResult {
  std::map<std::string, Matrix> images;
  std::vector<CheckReport> reports;
  double relation_residual = 0;  // max scaled residual of the target relations
  double witness_absolute = 0;   // absolute residual of the worst relation
  double operand_norm = 0;       // max(||lhs||, ||rhs||) of the worst relation
  bool homomorphism = false;
};

// phi: B -> H with phi(a) = b, phi(a^+) = b^+, phi(N) = 2/alpha b^+ b + nu/alpha K + (delta - beta)/alpha
IsoResult iso_phi(const AlgebraSpec& b_spec, const AlgebraSpec& h_spec, int dim, double tol, double lambda1 = 1.0);
// phi': H -> B with phi'(K) = -2/nu a^+ a + alpha/nu N + (beta - delta)/nu
IsoResult iso_phi_prime(const AlgebraSpec& h_spec, const AlgebraSpec& b_spec, int dim, double tol);

}  // namespace bosonhopf
