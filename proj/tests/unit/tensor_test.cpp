#include <gtest/gtest.h>

#include <random>

#include "bosonhopf/fock.hpp"
#include "bosonhopf/tensor.hpp"

using namespace bosonhopf;

namespace {

Matrix random_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(d(rng), d(rng));
  return m;
}

}  // namespace

TEST(Kron, SpecExamples) {
  EXPECT_LT((kron(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) - Matrix::Identity(4, 4)).norm(), 1e-15);
  Matrix p = Matrix::Zero(2, 2);
  p(1, 1) = 1;
  Matrix expected = Matrix::Zero(4, 4);
  expected(2, 2) = expected(3, 3) = 1;
  EXPECT_LT((kron(p, Matrix::Identity(2, 2)) - expected).norm(), 1e-15);

  const FockRep rep = build_rep(AlgebraSpec::b(2, 1), 2);
  const Matrix k = kron(rep.lowering(), rep.raising());
  // row |0,1> = 1, column |1,0> = 2
  Matrix single = Matrix::Zero(4, 4);
  single(1, 2) = 1;
  EXPECT_LT((k - single).norm(), 1e-15);
}

TEST(Kron, MixedProductProperty) {
  std::mt19937_64 rng(7);
  const Matrix a = random_matrix(3, rng), b = random_matrix(3, rng), c = random_matrix(3, rng), d = random_matrix(3, rng);
  EXPECT_LT((kron(a, b) * kron(c, d) - kron(a * c, b * d)).norm(), 1e-12);
}

TEST(Twist, SwapsFactors) {
  std::mt19937_64 rng(11);
  const Matrix a = random_matrix(3, rng), b = random_matrix(3, rng);
  EXPECT_LT((twist(kron(a, b), 3) - kron(b, a)).norm(), 1e-13);
  EXPECT_LT((twist(Matrix::Identity(9, 9), 3) - Matrix::Identity(9, 9)).norm(), 1e-15);
  const TensorOperator t = twist(TensorOperator(2, 3, kron(a, b)));
  EXPECT_LT((t.matrix - kron(b, a)).norm(), 1e-13);
}

TEST(Twist, RejectsWrongArity) {
  EXPECT_THROW(twist(TensorOperator(3, 2, Matrix::Identity(8, 8))), std::invalid_argument);
  EXPECT_THROW(TensorOperator(2, 3, Matrix::Identity(8, 8)), std::invalid_argument);
}

TEST(Embed, PairAndSingle) {
  std::mt19937_64 rng(3);
  const Matrix a = random_matrix(2, rng), b = random_matrix(2, rng), id = Matrix::Identity(2, 2);
  EXPECT_LT((embed_pair(kron(a, b), 2, 0, 1) - kron(kron(a, b), id)).norm(), 1e-13);
  EXPECT_LT((embed_pair(kron(a, b), 2, 1, 2) - kron(id, kron(a, b))).norm(), 1e-13);
  EXPECT_LT((embed_pair(kron(a, b), 2, 0, 2) - kron(kron(a, id), b)).norm(), 1e-13);
  EXPECT_LT((embed(a, 2, 1, 3) - kron(kron(id, a), id)).norm(), 1e-13);
}

TEST(TensorWindow, Columns) {
  EXPECT_EQ(TensorWindow::full(4, 2).columns.size(), 16u);
  EXPECT_EQ(TensorWindow::per_slot(4, 2, 1).columns.size(), 9u);
  // n1 + n2 <= 1
  EXPECT_EQ(TensorWindow::total(4, 2, 2).columns.size(), 3u);
}

TEST(Residual, ScaledByOperandNorms) {
  Matrix x = Matrix::Identity(3, 3) * 1e6;
  Matrix y = x;
  y(0, 0) += 1.0;
  const Residual r = residual(x, y, TensorWindow::full(3, 1));
  EXPECT_NEAR(r.absolute, 1.0, 1e-9);
  EXPECT_NEAR(r.scaled, 1.0 / (1e6 + 1.0), 1e-15);
  EXPECT_NEAR(spectral_norm(Matrix::Identity(3, 3) * 2.0), 2.0, 1e-14);
}
