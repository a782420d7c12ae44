#include "bosonhopf/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace bosonhopf {

double spectral_norm(const Matrix& x) {
  if (x.size() == 0) return 0.0;
  const Matrix gram = x.cols() <= x.rows() ? Matrix(x.adjoint() * x) : Matrix(x * x.adjoint());
  if (gram.rows() == 1) return std::sqrt(std::max(0.0, gram(0, 0).real()));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

Matrix identity(Index n) { return Matrix::Identity(n, n); }

bool is_diagonal(const Matrix& x, double tol) {
  for (Index c = 0; c < x.cols(); ++c)
    for (Index r = 0; r < x.rows(); ++r)
      if (r != c && std::abs(x(r, c)) > tol) return false;
  return true;
}

}  // namespace bosonhopf
