#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bosonhopf/fock.hpp"
#include "bosonhopf/report.hpp"

namespace bosonhopf {

// a/ad/N for the boson families, b/bd/M for H; grade is (-1)^{N~} or (-1)^{M~}.
enum class Generator : int { lower, raise, number, grade, grade_inv, k_op };

std::string generator_name(Family f, Generator g);
std::vector<Generator> family_generators(Family f);

// Generator images in some setting: the Fock rep itself, Delta-images on two
// sites, or S-images with products reversed (anti-homomorphism check).
struct ImageSet {
  std::map<Generator, Matrix> gens;
  Matrix unit;
  bool reversed = false;

  const Matrix& operator[](Generator g) const;
  Matrix mul(const Matrix& x, const Matrix& y) const;
  Matrix comm(const Matrix& x, const Matrix& y) const;
  Matrix acomm(const Matrix& x, const Matrix& y) const;
  // Entrywise functional calculus on a diagonal operator.
  Matrix apply(const Matrix& diag, const std::function<Complex(double)>& f) const;
};

ImageSet rep_images(const FockRep& rep);

struct Relation {
  std::string id;
  int raise_degree = 0;
  std::function<std::pair<Matrix, Matrix>(const ImageSet&, const AlgebraSpec&)> sides;
};

std::vector<Relation> defining_relations(Family f);

std::vector<CheckReport> check_defining_relations(const FockRep& rep, double tol);

}  // namespace bosonhopf
