#pragma once

#include <string>
#include <vector>

#include "bosonhopf/linalg.hpp"

namespace bosonhopf {

// Site ordering: the first Kronecker factor is the leftmost tensor slot, so the
// basis index of |n1,...,nk> is ((n1 D + n2) D + ...) + nk.
struct TensorOperator {
  int sites = 1;
  int site_dim = 1;
  Matrix matrix;

  TensorOperator(int sites, int site_dim, Matrix matrix);
};

Matrix kron(const Matrix& a, const Matrix& b);
TensorOperator kron(const TensorOperator& a, const TensorOperator& b);

Matrix swap_sites(int site_dim);
TensorOperator twist(const TensorOperator& x);
Matrix twist(const Matrix& x, int site_dim);

// Places a two-site operator on sites (i, j) of three sites, i < j.
Matrix embed_pair(const Matrix& r, int site_dim, int i, int j);
// Places a single-site operator on one of `sites` sites.
Matrix embed(const Matrix& op, int site_dim, int site, int sites);

// Two-site diagonal operator diag(f(n1 + s, n2 + s)).
template <class F>
Matrix two_site_diagonal(int site_dim, double shift, F&& f) {
  const Index n = static_cast<Index>(site_dim) * site_dim;
  Matrix out = Matrix::Zero(n, n);
  for (int i = 0; i < site_dim; ++i)
    for (int j = 0; j < site_dim; ++j) {
      const Index k = static_cast<Index>(i) * site_dim + j;
      out(k, k) = f(i + shift, j + shift);
    }
  return out;
}

enum class WindowKind { full, per_slot, total };
std::string to_string(WindowKind k);

// Columns of the k-site basis on which identities are asserted.
// per_slot keeps n_i <= D-1-d in every slot; total keeps n_1+...+n_k <= D-1-d.
struct TensorWindow {
  WindowKind kind = WindowKind::full;
  int degree = 0;
  int site_dim = 1;
  int sites = 1;
  std::vector<Index> columns;

  static TensorWindow full(int site_dim, int sites);
  static TensorWindow per_slot(int site_dim, int sites, int degree);
  static TensorWindow total(int site_dim, int sites, int degree);

  Index space_dim() const;
  std::string describe() const;
};

Matrix restrict_columns(const Matrix& x, const TensorWindow& w);

struct Residual {
  double scaled = 0;    // ||(L-R)P|| / max(1, ||LP||, ||RP||)
  double absolute = 0;  // ||(L-R)P||
  double lhs_norm = 0;
  double rhs_norm = 0;
};

Residual residual(const Matrix& lhs, const Matrix& rhs, const TensorWindow& w);
// Both operands already restricted to the window columns.
Residual residual_restricted(const Matrix& lhs_p, const Matrix& rhs_p);
double windowed_norm(const Matrix& x, const TensorWindow& w);

}  // namespace bosonhopf
