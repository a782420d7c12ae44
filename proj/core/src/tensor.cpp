#include "bosonhopf/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace bosonhopf {

namespace {

Index ipow(Index base, int e) {
  Index out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

TensorOperator::TensorOperator(int sites_, int site_dim_, Matrix m)
    : sites(sites_), site_dim(site_dim_), matrix(std::move(m)) {
  if (sites < 1 || site_dim < 1) throw std::invalid_argument("tensor operator needs sites >= 1 and D >= 1");
  const Index n = ipow(site_dim, sites);
  if (matrix.rows() != n || matrix.cols() != n)
    throw std::invalid_argument("tensor operator matrix must be D^n x D^n");
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

TensorOperator kron(const TensorOperator& a, const TensorOperator& b) {
  if (a.site_dim != b.site_dim) throw std::invalid_argument("kron of operators with different site dimensions");
  return {a.sites + b.sites, a.site_dim, kron(a.matrix, b.matrix)};
}

Matrix swap_sites(int d) {
  const Index n = static_cast<Index>(d) * d;
  Matrix p = Matrix::Zero(n, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) p(static_cast<Index>(j) * d + i, static_cast<Index>(i) * d + j) = 1.0;
  return p;
}

Matrix twist(const Matrix& x, int d) {
  const Index n = static_cast<Index>(d) * d;
  if (x.rows() != n || x.cols() != n) throw std::invalid_argument("twist needs a two-site operator");
  Matrix out(n, n);
  for (int i1 = 0; i1 < d; ++i1)
    for (int i2 = 0; i2 < d; ++i2)
      for (int j1 = 0; j1 < d; ++j1)
        for (int j2 = 0; j2 < d; ++j2)
          out(static_cast<Index>(i2) * d + i1, static_cast<Index>(j2) * d + j1) =
              x(static_cast<Index>(i1) * d + i2, static_cast<Index>(j1) * d + j2);
  return out;
}

TensorOperator twist(const TensorOperator& x) {
  if (x.sites != 2) throw std::invalid_argument("twist is defined on two-site operators only");
  return {2, x.site_dim, twist(x.matrix, x.site_dim)};
}

Matrix embed_pair(const Matrix& r, int d, int i, int j) {
  if (!(0 <= i && i < j && j <= 2)) throw std::invalid_argument("embed_pair needs 0 <= i < j <= 2");
  const Index dd = d;
  const Index n = dd * dd * dd;
  const int spectator = 3 - i - j;
  Matrix out = Matrix::Zero(n, n);
  int in[3], jn[3];
  for (Index row = 0; row < n; ++row) {
    in[0] = static_cast<int>(row / (dd * dd));
    in[1] = static_cast<int>((row / dd) % dd);
    in[2] = static_cast<int>(row % dd);
    const Index rr = in[i] * dd + in[j];
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        jn[i] = a;
        jn[j] = b;
        jn[spectator] = in[spectator];
        const Index col = (jn[0] * dd + jn[1]) * dd + jn[2];
        out(row, col) = r(rr, a * dd + b);
      }
  }
  return out;
}

Matrix embed(const Matrix& op, int d, int site, int sites) {
  if (site < 0 || site >= sites) throw std::invalid_argument("embed: site out of range");
  Matrix out = Matrix::Identity(1, 1);
  for (int s = 0; s < sites; ++s) out = kron(out, s == site ? op : Matrix(Matrix::Identity(d, d)));
  return out;
}

std::string to_string(WindowKind k) {
  switch (k) {
    case WindowKind::full: return "full";
    case WindowKind::per_slot: return "per-slot";
    case WindowKind::total: return "total";
  }
  return "?";
}

TensorWindow TensorWindow::full(int d, int sites) {
  TensorWindow w;
  w.kind = WindowKind::full;
  w.site_dim = d;
  w.sites = sites;
  const Index n = ipow(d, sites);
  w.columns.resize(static_cast<std::size_t>(n));
  for (Index c = 0; c < n; ++c) w.columns[static_cast<std::size_t>(c)] = c;
  return w;
}

namespace {

TensorWindow select(int d, int sites, int degree, WindowKind kind) {
  if (degree < 0 || degree >= d) throw std::invalid_argument("window degree must satisfy 0 <= d < D");
  TensorWindow w;
  w.kind = kind;
  w.degree = degree;
  w.site_dim = d;
  w.sites = sites;
  const int top = d - 1 - degree;
  const Index n = ipow(d, sites);
  for (Index c = 0; c < n; ++c) {
    Index rest = c;
    int total = 0, largest = 0;
    for (int s = 0; s < sites; ++s) {
      const int level = static_cast<int>(rest % d);
      rest /= d;
      total += level;
      largest = std::max(largest, level);
    }
    const bool keep = kind == WindowKind::total ? total <= top : largest <= top;
    if (keep) w.columns.push_back(c);
  }
  return w;
}

}  // namespace

TensorWindow TensorWindow::per_slot(int d, int sites, int degree) {
  return select(d, sites, degree, WindowKind::per_slot);
}

TensorWindow TensorWindow::total(int d, int sites, int degree) {
  return select(d, sites, degree, WindowKind::total);
}

Index TensorWindow::space_dim() const { return ipow(site_dim, sites); }

std::string TensorWindow::describe() const {
  if (kind == WindowKind::full) return "full";
  return to_string(kind) + " degree " + std::to_string(degree);
}

Matrix restrict_columns(const Matrix& x, const TensorWindow& w) {
  if (x.cols() != w.space_dim()) throw std::invalid_argument("window does not match operator size");
  if (w.kind == WindowKind::full) return x;
  Matrix out(x.rows(), static_cast<Index>(w.columns.size()));
  for (std::size_t k = 0; k < w.columns.size(); ++k) out.col(static_cast<Index>(k)) = x.col(w.columns[k]);
  return out;
}

Residual residual_restricted(const Matrix& lhs_p, const Matrix& rhs_p) {
  Residual r;
  r.absolute = spectral_norm(lhs_p - rhs_p);
  r.lhs_norm = spectral_norm(lhs_p);
  r.rhs_norm = spectral_norm(rhs_p);
  r.scaled = r.absolute / std::max({1.0, r.lhs_norm, r.rhs_norm});
  return r;
}

Residual residual(const Matrix& lhs, const Matrix& rhs, const TensorWindow& w) {
  return residual_restricted(restrict_columns(lhs, w), restrict_columns(rhs, w));
}

double windowed_norm(const Matrix& x, const TensorWindow& w) { return spectral_norm(restrict_columns(x, w)); }

}  // namespace bosonhopf
