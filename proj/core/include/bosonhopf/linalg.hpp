#pragma once

#include <Eigen/Dense>

#include "bosonhopf/scalars.hpp"

namespace bosonhopf {

using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

// Largest singular value, via the smaller Gram matrix.
double spectral_norm(const Matrix& x);

Matrix identity(Index n);

bool is_diagonal(const Matrix& x, double tol = 0.0);

}  // namespace bosonhopf
