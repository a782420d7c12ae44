#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "bosonhopf/fock.hpp"
#include "bosonhopf/report.hpp"

namespace bosonhopf::testing {

inline const std::vector<std::pair<double, double>>& b_grid() {
  static const std::vector<std::pair<double, double>> g = {{2, 1}, {2, 2}, {4, 1}, {1, 3}};
  return g;
}

inline const std::vector<std::pair<double, double>>& bbar_grid() {
  static const std::vector<std::pair<double, double>> g = {{1, 0}, {2, 1}, {1, 2}};
  return g;
}

inline const std::vector<double>& q_grid() {
  static const std::vector<double> g = {0.7, 1.3};
  return g;
}

inline const std::vector<std::tuple<double, double, double>>& h_grid() {
  static const std::vector<std::tuple<double, double, double>> g = {{1, 0.5, -0.25}, {1, 2, 0}, {0.5, 1, 0.25}};
  return g;
}

// Standard grid over all five families; with_distinguished adds the H points at
// rho = -(nu - delta + 1)/(2 delta) and rho = 0.
inline std::vector<AlgebraSpec> standard_grid(bool with_distinguished = false) {
  std::vector<AlgebraSpec> out;
  for (auto [a, b] : b_grid()) {
    out.push_back(AlgebraSpec::b(a, b));
    for (double q : q_grid()) out.push_back(AlgebraSpec::bq(a, b, q));
  }
  for (auto [s, t] : bbar_grid()) {
    out.push_back(AlgebraSpec::bbar(s, t));
    for (double q : q_grid()) out.push_back(AlgebraSpec::bbarq(s, t, q));
  }
  for (auto [d, n, r] : h_grid()) {
    out.push_back(AlgebraSpec::h(d, n, r));
    if (with_distinguished) {
      out.push_back(AlgebraSpec::h(d, n, AlgebraSpec::distinguished_rho(d, n)));
      out.push_back(AlgebraSpec::h(d, n, 0.0));
    }
  }
  return out;
}

inline double worst(const std::vector<CheckReport>& rs) {
  double w = 0;
  for (const CheckReport& r : rs)
    if (r.status != Status::skip) w = std::max(w, r.residual);
  return w;
}

inline bool all_pass(const std::vector<CheckReport>& rs) {
  for (const CheckReport& r : rs)
    if (r.status == Status::fail) return false;
  return true;
}

}  // namespace bosonhopf::testing
