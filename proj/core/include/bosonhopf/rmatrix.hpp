#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bosonhopf/fock.hpp"
#include "bosonhopf/hopf.hpp"
#include "bosonhopf/report.hpp"

namespace bosonhopf {

enum class RKind { r0, bq, bbarq, trivial };
std::string to_string(RKind k);

// Branch registry for the root and phase choices in the deformed R-matrices.
//   x_sign:            x = x_sign * i q^{-alpha/2} (Bq) or x_sign * q^{sigma/2} (Bbarq)
//   series_phase_sign: (-1)^{l(l-1)/4} evaluated as phase_pow(sign * l(l-1)/4)
//   grade_phase_sign:  (-1)^{l N~} evaluated as phase_pow(sign * l N~)
struct BranchChoice {
  int x_sign = 1;
  int series_phase_sign = 1;
  int grade_phase_sign = 1;
  // Bbarq only, diagnostic: q^{-(sigma/4) l(l+1)} and q^{+-(sigma/2) l N~} as in the Bq
  // formula. Not part of all() and never used for a pass.
  bool bq_shaped = false;

  std::string describe() const;
  bool principal() const { return x_sign == 1 && series_phase_sign == 1 && grade_phase_sign == 1 && !bq_shaped; }
  // All combinations that change the formula for the given family.
  static std::vector<BranchChoice> all(Family f);
};

// R = prefix * F(N~1, N~2) * series, each factor kept in Sweedler form so that
// (Delta x id)R and (S x id)R can be evaluated.
struct RMatrix {
  RKind kind = RKind::trivial;
  AlgebraSpec spec;
  int dim = 0;
  Matrix matrix;
  std::optional<double> q;
  BranchChoice branch;
  std::string branch_note;
  int series_terms = 0;

  SweedlerSum prefix;
  std::function<Complex(double, double)> coupling;  // empty: F = 1
  SweedlerSum series;
};

RMatrix build_r0(const FockRep& rep);
RMatrix build_r(const FockRep& rep, BranchChoice branch = {});
RMatrix trivial_r(const FockRep& rep);

constexpr int kRWindowDegree = 2;

std::vector<CheckReport> check_quasitriangularity(const RMatrix& r, const HopfTables& t, double tol,
                                                  int degree = kRWindowDegree);
CheckReport check_ybe(const RMatrix& r, double tol, int degree = kRWindowDegree);
std::vector<CheckReport> check_r_axioms(const RMatrix& r, const HopfTables& t, double tol,
                                        int degree = kRWindowDegree);

// Largest quasitriangularity residual over the generators.
double max_quasitriangularity(const RMatrix& r, const HopfTables& t, int degree = kRWindowDegree);

struct BranchRow {
  BranchChoice branch;
  double max_residual = 0;
  std::string worst_generator;
  bool passed = false;
};

struct BranchDiagnosis {
  std::vector<BranchRow> rows;
  // Bbarq: the Bq-shaped variant, reported beside the printed branches for the record.
  std::optional<BranchRow> candidate;
  double candidate_axioms = 0;  // worst fusion/inverse residual of the candidate
  bool any_pass = false;
  // every branch fails by more than two orders of magnitude
  bool suspected_transcription_issue = false;
  std::string table() const;
};

BranchDiagnosis diagnose_branches(const HopfTables& t, double tol, int degree = kRWindowDegree);

struct ClassicalLimitPoint {
  double q = 0;
  double distance = 0;       // ||(R(q) - R0) P|| in the R window
  double full_distance = 0;  // same, unwindowed
};

// Bq family only; the spec's q is replaced by each entry of qs.
std::vector<ClassicalLimitPoint> classical_limit(const AlgebraSpec& spec, int dim, const std::vector<double>& qs,
                                                 int degree = kRWindowDegree);

}  // namespace bosonhopf
