#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bosonhopf/fock.hpp"
#include "bosonhopf/relations.hpp"
#include "bosonhopf/report.hpp"
#include "bosonhopf/tensor.hpp"

namespace bosonhopf {

// One factor of an operator word: a ladder generator, K, or a function of the
// primitive variable N~ (M~ for H). Diagonal letters carry their own Hopf
// structure: Delta f = f(N~ x 1 + 1 x N~), S f = f(-N~), eps f = f(0).
struct Letter {
  enum class Kind { lower, raise, k_op, diagonal };
  Kind kind = Kind::diagonal;
  std::function<Complex(double)> fn;
  std::string label;

  static Letter lower(Family f);
  static Letter raise(Family f);
  static Letter k();
  static Letter diagonal(std::string label, std::function<Complex(double)> fn);
};

using Word = std::vector<Letter>;  // empty word = identity

struct Monomial {
  Complex coef;
  Word word;
};

struct SweedlerTerm {
  Complex coef;
  Word left;
  Word right;
};

using SweedlerSum = std::vector<SweedlerTerm>;

std::string to_string(const Word& w);
std::string to_string(const SweedlerSum& s);
std::string to_string(const std::vector<Monomial>& m);

struct GeneratorEntry {
  Generator id{};
  std::string name;
  SweedlerSum delta;
  Complex counit;
  std::vector<Monomial> antipode;
  std::vector<Monomial> antipode_inv;
};

class HopfTables {
public:
  explicit HopfTables(FockRep rep);

  const FockRep& rep() const { return rep_; }
  const AlgebraSpec& spec() const { return rep_.spec(); }
  int dim() const { return rep_.dim(); }

  std::vector<Generator> generators() const;
  bool has(Generator g) const { return entries_.count(g) != 0; }
  const GeneratorEntry& entry(Generator g) const;

  Matrix image(Generator g) const;
  const Matrix& delta(Generator g) const;
  Complex counit(Generator g) const { return entry(g).counit; }
  const Matrix& antipode(Generator g) const;
  const Matrix& antipode_inv(Generator g) const;

  Matrix letter(const Letter& l) const;
  Matrix word(const Word& w) const;
  Matrix word_delta(const Word& w) const;
  Matrix word_antipode(const Word& w) const;
  Matrix word_antipode_inv(const Word& w) const;
  Complex word_counit(const Word& w) const;
  // (n+1)-site image of a word under the iterated coproduct
  Matrix word_delta_n(const Word& w, int n) const;
  Matrix monomials(const std::vector<Monomial>& m) const;
  Matrix sum_matrix(const SweedlerSum& s) const;

private:
  Generator generator_of(const Letter& l) const;

  FockRep rep_;
  std::map<Generator, GeneratorEntry> entries_;
  std::map<Generator, Matrix> delta_, antipode_, antipode_inv_;
};

HopfTables build_tables(const FockRep& rep);

// (n+1)-site image of g under the iterated coproduct, applied in the first slot.
TensorOperator coproduct_n(const HopfTables& tables, Generator g, int n);

enum class AdjointVariant { ad, ad_prime };

// ad_g(X) = sum g(1) X S(g(2));  ad'_g(X) = sum g(2) X S^-1(g(1))
Matrix adjoint_action(const HopfTables& tables, Generator g, const Matrix& x, AdjointVariant v = AdjointVariant::ad);
Matrix adjoint_action(const HopfTables& tables, const SweedlerSum& delta, const Matrix& x,
                      AdjointVariant v = AdjointVariant::ad);

constexpr int kHopfWindowDegree = 2;

std::vector<CheckReport> check_coassociativity(const HopfTables& t, double tol, int degree = kHopfWindowDegree);
std::vector<CheckReport> check_counit(const HopfTables& t, double tol, int degree = kHopfWindowDegree);
std::vector<CheckReport> check_antipode(const HopfTables& t, double tol, int degree = kHopfWindowDegree);
std::vector<CheckReport> check_delta_homomorphism(const HopfTables& t, double tol, int degree = kHopfWindowDegree);

}  // namespace bosonhopf
