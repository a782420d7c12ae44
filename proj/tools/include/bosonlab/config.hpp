#pragma once

#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bosonhopf/fock.hpp"

namespace bosonlab {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> suites = {"relations", "hopf",     "delta-hom", "rmatrix",
                                                  "ybe",       "casimir", "structure", "iso"};
  return suites;
}

enum class BasisMode { automatic, unnormalized, unitary };

struct Scenario {
  std::string name;
  bosonhopf::Family family = bosonhopf::Family::B;
  std::map<std::string, std::vector<double>> grid;  // family parameters only
  BasisMode basis = BasisMode::automatic;
  std::optional<int> dim;
  std::map<std::string, int> suite_dims;
  std::optional<double> tol;
  std::map<std::string, double> suite_tols;
  std::vector<std::string> suites;
  double lambda1 = 1.0;
  double lambda4 = 0.0;
  std::map<std::string, double> iso;  // partner parameters, e.g. delta, nu, rho for a B scenario
  std::vector<std::string> warnings;
};

struct RunConfig {
  std::optional<int> jobs;  // default: available parallelism
  int ybe_jobs = 1;
  std::string output;
  std::vector<Scenario> scenarios;
};

// INI-style text: global "key = value" lines, then "[scenario NAME]" blocks.
// Comma lists on parameter keys expand to a Cartesian grid.
RunConfig parse_config(std::istream& in, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

struct GridPoint {
  int index = 0;
  bosonhopf::AlgebraSpec spec;
  std::optional<std::string> skip_reason;  // violated precondition, named
};

std::vector<GridPoint> grid_expand(const Scenario& s);

}  // namespace bosonlab
