#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "bosonhopf/fock.hpp"
#include "bosonhopf/tensor.hpp"

namespace bosonhopf {

enum class Status { pass, fail, skip };
std::string to_string(Status s);

struct CheckReport {
  std::string identity;   // stable id from the identity catalog
  std::string subject;    // generator or relation the check was applied to
  std::string reference;  // formula the id stands for
  std::string family;
  std::map<std::string, double> parameters;
  std::string basis;
  int dim = 0;
  std::string window = "full";
  int window_degree = 0;
  double residual = std::numeric_limits<double>::quiet_NaN();
  double tolerance = 0;
  Status status = Status::fail;
  std::string branch_note;
  std::string message;
  double wall_ms = 0;

  bool passed() const { return status == Status::pass; }
};

struct IdentityInfo {
  std::string id;
  std::string suite;
  std::string formula;
};

const std::vector<IdentityInfo>& identity_catalog();
// Throws std::logic_error for ids missing from the catalog.
const IdentityInfo& lookup_identity(const std::string& id);

// pass iff residual < tol (NaN fails).
CheckReport make_report(const std::string& id, const AlgebraSpec& spec, int dim, const TensorWindow& window,
                        double residual, double tol);
CheckReport make_skip(const std::string& id, const AlgebraSpec& spec, int dim, const std::string& reason);

}  // namespace bosonhopf
