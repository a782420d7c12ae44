#include "bosonhopf/relations.hpp"

#include <chrono>
#include <stdexcept>

#include "bosonhopf/scalars.hpp"

namespace bosonhopf {

std::string generator_name(Family f, Generator g) {
  const bool h = f == Family::H;
  switch (g) {
    case Generator::lower: return h ? "b" : "a";
    case Generator::raise: return h ? "bd" : "ad";
    case Generator::number: return h ? "M" : "N";
    case Generator::grade: return "g";
    case Generator::grade_inv: return "ginv";
    case Generator::k_op: return "K";
  }
  return "?";
}

std::vector<Generator> family_generators(Family f) {
  using G = Generator;
  switch (f) {
    case Family::B:
    case Family::Bq: return {G::lower, G::raise, G::number, G::grade, G::grade_inv};
    case Family::Bbar:
    case Family::Bbarq: return {G::lower, G::raise, G::number};
    case Family::H: return {G::lower, G::raise, G::number, G::k_op, G::grade, G::grade_inv};
  }
  return {};
}

const Matrix& ImageSet::operator[](Generator g) const {
  auto it = gens.find(g);
  if (it == gens.end()) throw std::logic_error("generator image missing from image set");
  return it->second;
}

Matrix ImageSet::mul(const Matrix& x, const Matrix& y) const { return reversed ? Matrix(y * x) : Matrix(x * y); }
Matrix ImageSet::comm(const Matrix& x, const Matrix& y) const { return mul(x, y) - mul(y, x); }
Matrix ImageSet::acomm(const Matrix& x, const Matrix& y) const { return mul(x, y) + mul(y, x); }

Matrix ImageSet::apply(const Matrix& diag, const std::function<Complex(double)>& f) const {
  if (!is_diagonal(diag, 1e-12 * std::max(1.0, diag.cwiseAbs().maxCoeff())))
    throw std::invalid_argument("functional calculus needs a diagonal operator");
  Matrix out = Matrix::Zero(diag.rows(), diag.cols());
  for (Index i = 0; i < diag.rows(); ++i) out(i, i) = f(diag(i, i).real());
  return out;
}

ImageSet rep_images(const FockRep& rep) {
  ImageSet s;
  s.unit = rep.identity();
  s.gens[Generator::lower] = rep.lowering();
  s.gens[Generator::raise] = rep.raising();
  s.gens[Generator::number] = rep.number();
  s.gens[Generator::grade] = rep.grade_plus();
  s.gens[Generator::grade_inv] = rep.grade_minus();
  if (rep.has_k_op()) s.gens[Generator::k_op] = rep.k_op();
  return s;
}

namespace {

using G = Generator;
using Sides = std::pair<Matrix, Matrix>;

Relation number_lower(const std::string& id) {
  return {id, 0, [](const ImageSet& m, const AlgebraSpec&) -> Sides {
            return {m.comm(m[G::number], m[G::lower]), -m[G::lower]};
          }};
}

Relation number_raise(const std::string& id) {
  return {id, 1, [](const ImageSet& m, const AlgebraSpec&) -> Sides {
            return {m.comm(m[G::number], m[G::raise]), m[G::raise]};
          }};
}

// Zero-sided relations are posed as XY = -YX or XY = YX so the residual scale
// tracks the operand magnitudes.
void add_grade_relations(std::vector<Relation>& out, const std::string& prefix, bool with_k) {
  out.push_back({prefix + ".grade_lower", 0, [](const ImageSet& m, const AlgebraSpec&) -> Sides {
                   return {m.mul(m[G::grade], m[G::lower]), -m.mul(m[G::lower], m[G::grade])};
                 }});
  out.push_back({prefix + ".grade_raise", 1, [](const ImageSet& m, const AlgebraSpec&) -> Sides {
                   return {m.mul(m[G::grade], m[G::raise]), -m.mul(m[G::raise], m[G::grade])};
                 }});
  out.push_back({prefix + ".grade_number", 0, [](const ImageSet& m, const AlgebraSpec&) -> Sides {
                   return {m.mul(m[G::grade], m[G::number]), m.mul(m[G::number], m[G::grade])};
                 }});
  out.push_back({prefix + ".grade_inverse", 0, [](const ImageSet& m, const AlgebraSpec&) -> Sides {
                   return {m.mul(m[G::grade], m[G::grade_inv]), m.unit};
                 }});
  if (with_k)
    out.push_back({prefix + ".grade_k", 0, [](const ImageSet& m, const AlgebraSpec&) -> Sides {
                     return {m.mul(m[G::grade], m[G::k_op]), m.mul(m[G::k_op], m[G::grade])};
                   }});
}

}  // namespace

std::vector<Relation> defining_relations(Family f) {
  std::vector<Relation> out;
  switch (f) {
    case Family::B:
      out.push_back({"B.anticommutator", 1, [](const ImageSet& m, const AlgebraSpec& s) -> Sides {
                       return {m.acomm(m[G::lower], m[G::raise]), s.alpha * m[G::number] + s.beta * m.unit};
                     }});
      out.push_back(number_lower("B.number_lower"));
      out.push_back(number_raise("B.number_raise"));
      add_grade_relations(out, "B", false);
      break;
    case Family::Bbar:
      out.push_back({"Bbar.commutator", 1, [](const ImageSet& m, const AlgebraSpec& s) -> Sides {
                       return {m.comm(m[G::lower], m[G::raise]), s.sigma * m[G::number] + s.tau * m.unit};
                     }});
      out.push_back(number_lower("Bbar.number_lower"));
      out.push_back(number_raise("Bbar.number_raise"));
      break;
    case Family::Bq:
      out.push_back({"Bq.anticommutator", 1, [](const ImageSet& m, const AlgebraSpec& s) -> Sides {
                       const QValue q(s.q);
                       const Matrix bracket = m.apply(s.alpha * m[G::number] + s.beta * m.unit,
                                                      [&](double x) { return Complex(q_bracket(x, q)); });
                       return {m.acomm(m[G::lower], m[G::raise]), bracket};
                     }});
      out.push_back(number_lower("Bq.number_lower"));
      out.push_back(number_raise("Bq.number_raise"));
      add_grade_relations(out, "Bq", false);
      break;
    case Family::Bbarq:
      out.push_back({"Bbarq.commutator", 1, [](const ImageSet& m, const AlgebraSpec& s) -> Sides {
                       const QValue q(s.q);
                       const Matrix bracket = m.apply(s.sigma * m[G::number] + s.tau * m.unit,
                                                      [&](double x) { return Complex(q_bracket(x, q)); });
                       return {m.comm(m[G::lower], m[G::raise]), bracket};
                     }});
      out.push_back(number_lower("Bbarq.number_lower"));
      out.push_back(number_raise("Bbarq.number_raise"));
      break;
    case Family::H:
      out.push_back({"H.commutator", 1, [](const ImageSet& m, const AlgebraSpec& s) -> Sides {
                       return {m.comm(m[G::lower], m[G::raise]), s.delta * m.unit + s.nu * m[G::k_op]};
                     }});
      out.push_back({"H.k_lower", 0, [](const ImageSet& m, const AlgebraSpec&) -> Sides {
                       return {m.mul(m[G::k_op], m[G::lower]), -m.mul(m[G::lower], m[G::k_op])};
                     }});
      out.push_back({"H.k_raise", 1, [](const ImageSet& m, const AlgebraSpec&) -> Sides {
                       return {m.mul(m[G::k_op], m[G::raise]), -m.mul(m[G::raise], m[G::k_op])};
                     }});
      out.push_back(number_lower("H.number_lower"));
      out.push_back(number_raise("H.number_raise"));
      add_grade_relations(out, "H", true);
      break;
  }
  return out;
}

std::vector<CheckReport> check_defining_relations(const FockRep& rep, double tol) {
  std::vector<CheckReport> out;
  const ImageSet images = rep_images(rep);
  for (const Relation& rel : defining_relations(rep.family())) {
    const auto start = std::chrono::steady_clock::now();
    const auto [lhs, rhs] = rel.sides(images, rep.spec());
    const TensorWindow w = TensorWindow::per_slot(rep.dim(), 1, rel.raise_degree);
    CheckReport r = make_report("relations." + rel.id, rep.spec(), rep.dim(), w, residual(lhs, rhs, w).scaled, tol);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bosonhopf
