#include "bosonhopf/hopf.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bosonhopf/errors.hpp"
#include "bosonhopf/scalars.hpp"

namespace bosonhopf {

Letter Letter::lower(Family f) { return {Kind::lower, {}, f == Family::H ? "b" : "a"}; }
Letter Letter::raise(Family f) { return {Kind::raise, {}, f == Family::H ? "bd" : "ad"}; }
Letter Letter::k() { return {Kind::k_op, {}, "K"}; }
Letter Letter::diagonal(std::string label, std::function<Complex(double)> fn) {
  return {Kind::diagonal, std::move(fn), std::move(label)};
}

std::string to_string(const Word& w) {
  if (w.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + w[i].label;
  return out;
}

namespace {

std::string coef_text(Complex c) {
  std::ostringstream os;
  if (c.imag() == 0.0)
    os << c.real();
  else
    os << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
  return os.str();
}

}  // namespace

std::string to_string(const SweedlerSum& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " + ";
    out += coef_text(s[i].coef) + " [" + to_string(s[i].left) + "] x [" + to_string(s[i].right) + "]";
  }
  return out;
}

std::string to_string(const std::vector<Monomial>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += " + ";
    out += coef_text(m[i].coef) + " [" + to_string(m[i].word) + "]";
  }
  return out;
}

namespace {

using G = Generator;

struct Letters {
  Letter a, ad, k, number, g, gi;
};

Letters base_letters(const AlgebraSpec& spec, double s) {
  const Family f = spec.family;
  Letters l{Letter::lower(f), Letter::raise(f), Letter::k(), {}, {}, {}};
  if (f == Family::H) {
    const double rho = spec.rho;
    l.number = Letter::diagonal("M", [rho](double x) { return Complex(x + rho - 0.5); });
  } else {
    l.number = Letter::diagonal("N", [s](double x) { return Complex(x - s); });
  }
  l.g = Letter::diagonal("g", [](double x) { return phase_pow(x); });
  l.gi = Letter::diagonal("ginv", [](double x) { return phase_pow(-x); });
  return l;
}

GeneratorEntry grade_entry(const Letters& l, bool inverse) {
  const Letter& self = inverse ? l.gi : l.g;
  const Letter& other = inverse ? l.g : l.gi;
  return {inverse ? G::grade_inv : G::grade, self.label, {{1.0, {self}, {self}}}, 1.0, {{1.0, {other}}}, {{1.0, {other}}}};
}

// Delta(N) = N x 1 + 1 x N + s 1 x 1 with S(N) = -N - 2s; c0 = s (or 1/2 - rho for M).
GeneratorEntry number_entry(const Letters& l, double c0) {
  GeneratorEntry e{G::number, l.number.label, {}, -c0, {}, {}};
  e.delta = {{1.0, {l.number}, {}}, {1.0, {}, {l.number}}, {c0, {}, {}}};
  e.antipode = {{-1.0, {l.number}}, {-2.0 * c0, {}}};
  e.antipode_inv = e.antipode;
  return e;
}

std::map<Generator, GeneratorEntry> make_entries(const FockRep& rep) {
  const AlgebraSpec& spec = rep.spec();
  const double s = rep.shift();
  const Letters l = base_letters(spec, s);
  std::map<Generator, GeneratorEntry> e;

  switch (spec.family) {
    case Family::B: {
      e[G::number] = number_entry(l, s);
      e[G::lower] = {G::lower, "a", {{1.0, {l.a}, {}}, {1.0, {l.g}, {l.a}}}, 0.0, {{-1.0, {l.gi, l.a}}}, {{1.0, {l.gi, l.a}}}};
      e[G::raise] = {G::raise, "ad", {{1.0, {l.ad}, {}}, {1.0, {l.gi}, {l.ad}}}, 0.0, {{1.0, {l.ad, l.g}}}, {{-1.0, {l.ad, l.g}}}};
      e[G::grade] = grade_entry(l, false);
      e[G::grade_inv] = grade_entry(l, true);
      break;
    }
    case Family::Bbar: {
      e[G::number] = number_entry(l, s);
      e[G::lower] = {G::lower, "a", {{1.0, {l.a}, {}}, {1.0, {}, {l.a}}}, 0.0, {{-1.0, {l.a}}}, {{-1.0, {l.a}}}};
      e[G::raise] = {G::raise, "ad", {{1.0, {l.ad}, {}}, {1.0, {}, {l.ad}}}, 0.0, {{-1.0, {l.ad}}}, {{-1.0, {l.ad}}}};
      break;
    }
    case Family::Bq: {
      const double q = spec.q, al = spec.alpha;
      const Letter qp = Letter::diagonal("q^(alpha N~/2)", [q, al](double x) { return Complex(std::pow(q, al * x / 2.0)); });
      const Letter qm = Letter::diagonal("q^(-alpha N~/2)", [q, al](double x) { return Complex(std::pow(q, -al * x / 2.0)); });
      const double h = std::pow(q, al / 2.0);
      e[G::number] = number_entry(l, s);
      // S^-1 rows chosen as the inverse of S (see README, deviations)
      e[G::lower] = {G::lower, "a", {{1.0, {l.a}, {qp}}, {1.0, {l.g, qm}, {l.a}}}, 0.0, {{-1.0 / h, {l.gi, l.a}}}, {{h, {l.gi, l.a}}}};
      e[G::raise] = {G::raise, "ad", {{1.0, {l.ad}, {qp}}, {1.0, {l.gi, qm}, {l.ad}}}, 0.0, {{h, {l.ad, l.g}}}, {{-1.0 / h, {l.ad, l.g}}}};
      e[G::grade] = grade_entry(l, false);
      e[G::grade_inv] = grade_entry(l, true);
      break;
    }
    case Family::Bbarq: {
      const double q = spec.q, sg = spec.sigma;
      const Letter qp = Letter::diagonal("q^(sigma N~/2)", [q, sg](double x) { return Complex(std::pow(q, sg * x / 2.0)); });
      const Letter qm = Letter::diagonal("q^(-sigma N~/2)", [q, sg](double x) { return Complex(std::pow(q, -sg * x / 2.0)); });
      const double h = std::pow(q, sg / 2.0);
      e[G::number] = number_entry(l, s);
      e[G::lower] = {G::lower, "a", {{1.0, {l.a}, {qp}}, {1.0, {qm}, {l.a}}}, 0.0, {{-1.0 / h, {l.a}}}, {{-h, {l.a}}}};
      e[G::raise] = {G::raise, "ad", {{1.0, {l.ad}, {qp}}, {1.0, {qm}, {l.ad}}}, 0.0, {{-h, {l.ad}}}, {{-1.0 / h, {l.ad}}}};
      break;
    }
    case Family::H: {
      const double dl = spec.delta, nu = spec.nu;
      e[G::number] = number_entry(l, 0.5 - spec.rho);
      e[G::lower] = {G::lower, "b", {{1.0, {l.a}, {}}, {1.0, {l.g}, {l.a}}}, 0.0, {{-1.0, {l.gi, l.a}}}, {{1.0, {l.gi, l.a}}}};
      e[G::raise] = {G::raise, "bd", {{1.0, {l.ad}, {}}, {1.0, {l.gi}, {l.ad}}}, 0.0, {{1.0, {l.ad, l.g}}}, {{-1.0, {l.ad, l.g}}}};
      e[G::k_op] = {G::k_op,
                    "K",
                    {{1.0, {l.k}, {}},
                     {1.0, {}, {l.k}},
                     {dl / nu, {}, {}},
                     {-2.0 / nu, {l.gi, l.a}, {l.ad}},
                     {2.0 / nu, {l.g, l.ad}, {l.a}}},
                    -dl / nu,
                    {{1.0, {l.k}}},
                    {{1.0, {l.k}}}};
      e[G::grade] = grade_entry(l, false);
      e[G::grade_inv] = grade_entry(l, true);
      break;
    }
  }
  return e;
}

void validate(const AlgebraSpec& s) {
  switch (s.family) {
    case Family::B:
    case Family::Bq:
      if (s.alpha == 0.0) throw ProvisoError("alpha != 0", "Hopf structure is provided that alpha != 0");
      break;
    case Family::Bbar:
    case Family::Bbarq:
      if (s.sigma == 0.0) throw ProvisoError("sigma != 0", "Hopf structure is provided that sigma != 0");
      break;
    case Family::H:
      if (s.delta == 0.0) throw ProvisoError("delta != 0", "Hopf structure is provided that delta != 0");
      if (s.nu == 0.0) throw ProvisoError("nu != 0", "Hopf structure is provided that nu != 0");
      break;
  }
}

// k-site diagonal f(N~_1 + ... + N~_k)
Matrix multi_site_diagonal(int d, int sites, double shift, const std::function<Complex(double)>& f) {
  Index n = 1;
  for (int i = 0; i < sites; ++i) n *= d;
  Matrix out = Matrix::Zero(n, n);
  for (Index c = 0; c < n; ++c) {
    Index rest = c;
    double total = 0;
    for (int i = 0; i < sites; ++i) {
      total += static_cast<double>(rest % d) + shift;
      rest /= d;
    }
    out(c, c) = f(total);
  }
  return out;
}

}  // namespace

HopfTables::HopfTables(FockRep rep) : rep_(std::move(rep)) {
  validate(rep_.spec());
  entries_ = make_entries(rep_);
  for (const auto& [g, e] : entries_) {
    delta_[g] = sum_matrix(e.delta);
    antipode_[g] = monomials(e.antipode);
    antipode_inv_[g] = monomials(e.antipode_inv);
  }
}

std::vector<Generator> HopfTables::generators() const { return family_generators(rep_.family()); }

const GeneratorEntry& HopfTables::entry(Generator g) const {
  auto it = entries_.find(g);
  if (it == entries_.end())
    throw std::invalid_argument("no Hopf table entry for generator " + generator_name(rep_.family(), g) + " in family " +
                                to_string(rep_.family()));
  return it->second;
}

Matrix HopfTables::image(Generator g) const {
  switch (g) {
    case G::lower: return rep_.lowering();
    case G::raise: return rep_.raising();
    case G::number: return rep_.number();
    case G::grade: return rep_.grade_plus();
    case G::grade_inv: return rep_.grade_minus();
    case G::k_op: return rep_.k_op();
  }
  return {};
}

const Matrix& HopfTables::delta(Generator g) const {
  entry(g);
  return delta_.at(g);
}

const Matrix& HopfTables::antipode(Generator g) const {
  entry(g);
  return antipode_.at(g);
}

const Matrix& HopfTables::antipode_inv(Generator g) const {
  entry(g);
  return antipode_inv_.at(g);
}

Generator HopfTables::generator_of(const Letter& l) const {
  switch (l.kind) {
    case Letter::Kind::lower: return G::lower;
    case Letter::Kind::raise: return G::raise;
    case Letter::Kind::k_op: return G::k_op;
    case Letter::Kind::diagonal: break;
  }
  throw std::logic_error("diagonal letters have no generator");
}

Matrix HopfTables::letter(const Letter& l) const {
  if (l.kind == Letter::Kind::diagonal) return rep_.diagonal(l.fn);
  return image(generator_of(l));
}

Matrix HopfTables::word(const Word& w) const {
  Matrix out = rep_.identity();
  for (const Letter& l : w) out = out * letter(l);
  return out;
}

Matrix HopfTables::word_delta(const Word& w) const {
  const int d = rep_.dim();
  Matrix out = Matrix::Identity(static_cast<Index>(d) * d, static_cast<Index>(d) * d);
  for (const Letter& l : w) {
    if (l.kind == Letter::Kind::diagonal)
      out = out * two_site_diagonal(d, rep_.shift(), [&](double x, double y) { return l.fn(x + y); });
    else
      out = out * delta(generator_of(l));
  }
  return out;
}

Matrix HopfTables::word_antipode(const Word& w) const {
  Matrix out = rep_.identity();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Letter& l = *it;
    if (l.kind == Letter::Kind::diagonal)
      out = out * rep_.diagonal([&](double x) { return l.fn(-x); });
    else
      out = out * antipode(generator_of(l));
  }
  return out;
}

Matrix HopfTables::word_antipode_inv(const Word& w) const {
  Matrix out = rep_.identity();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Letter& l = *it;
    if (l.kind == Letter::Kind::diagonal)
      out = out * rep_.diagonal([&](double x) { return l.fn(-x); });
    else
      out = out * antipode_inv(generator_of(l));
  }
  return out;
}

Complex HopfTables::word_counit(const Word& w) const {
  Complex out{1.0, 0.0};
  for (const Letter& l : w) out *= l.kind == Letter::Kind::diagonal ? l.fn(0.0) : counit(generator_of(l));
  return out;
}

Matrix HopfTables::word_delta_n(const Word& w, int n) const {
  if (n < 0) throw std::invalid_argument("iterated coproduct order must be >= 0");
  if (n == 0) return word(w);
  const int d = rep_.dim();
  Index size = 1;
  for (int i = 0; i <= n; ++i) size *= d;
  Matrix out = Matrix::Identity(size, size);
  for (const Letter& l : w) {
    if (l.kind == Letter::Kind::diagonal) {
      out = out * multi_site_diagonal(d, n + 1, rep_.shift(), l.fn);
    } else {
      Matrix acc = Matrix::Zero(size, size);
      for (const SweedlerTerm& t : entry(generator_of(l)).delta)
        acc += t.coef * kron(word_delta_n(t.left, n - 1), word(t.right));
      out = out * acc;
    }
  }
  return out;
}

Matrix HopfTables::monomials(const std::vector<Monomial>& m) const {
  Matrix out = Matrix::Zero(rep_.dim(), rep_.dim());
  for (const Monomial& x : m) out += x.coef * word(x.word);
  return out;
}

Matrix HopfTables::sum_matrix(const SweedlerSum& s) const {
  const Index n = static_cast<Index>(rep_.dim()) * rep_.dim();
  Matrix out = Matrix::Zero(n, n);
  for (const SweedlerTerm& t : s) out += t.coef * kron(word(t.left), word(t.right));
  return out;
}

HopfTables build_tables(const FockRep& rep) { return HopfTables(rep); }

TensorOperator coproduct_n(const HopfTables& t, Generator g, int n) {
  if (n < 1) throw std::invalid_argument("coproduct_n needs n >= 1");
  const int d = t.dim();
  Index size = 1;
  for (int i = 0; i <= n; ++i) size *= d;
  Matrix acc = Matrix::Zero(size, size);
  for (const SweedlerTerm& term : t.entry(g).delta)
    acc += term.coef * kron(t.word_delta_n(term.left, n - 1), t.word(term.right));
  return {n + 1, d, std::move(acc)};
}

Matrix adjoint_action(const HopfTables& t, const SweedlerSum& delta, const Matrix& x, AdjointVariant v) {
  Matrix out = Matrix::Zero(x.rows(), x.cols());
  for (const SweedlerTerm& term : delta) {
    if (v == AdjointVariant::ad)
      out += term.coef * t.word(term.left) * x * t.word_antipode(term.right);
    else
      out += term.coef * t.word(term.right) * x * t.word_antipode_inv(term.left);
  }
  return out;
}

Matrix adjoint_action(const HopfTables& t, Generator g, const Matrix& x, AdjointVariant v) {
  return adjoint_action(t, t.entry(g).delta, x, v);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

CheckReport finish(CheckReport r, const std::string& subject, Clock::time_point start) {
  r.subject = subject;
  r.wall_ms = ms_since(start);
  return r;
}

}  // namespace

std::vector<CheckReport> check_coassociativity(const HopfTables& t, double tol, int degree) {
  std::vector<CheckReport> out;
  const int d = t.dim();
  const TensorWindow w = TensorWindow::per_slot(d, 3, degree);
  for (Generator g : t.generators()) {
    const auto start = Clock::now();
    const Index n = static_cast<Index>(d) * d * d;
    Matrix lhs = Matrix::Zero(n, n), rhs = Matrix::Zero(n, n);
    for (const SweedlerTerm& term : t.entry(g).delta) {
      lhs += term.coef * kron(t.word_delta(term.left), t.word(term.right));
      rhs += term.coef * kron(t.word(term.left), t.word_delta(term.right));
    }
    out.push_back(finish(make_report("hopf.coassociativity", t.spec(), d, w, residual(lhs, rhs, w).scaled, tol),
                         t.entry(g).name, start));
  }
  return out;
}

std::vector<CheckReport> check_counit(const HopfTables& t, double tol, int degree) {
  std::vector<CheckReport> out;
  const int d = t.dim();
  const TensorWindow w = TensorWindow::per_slot(d, 1, degree);
  for (Generator g : t.generators()) {
    const auto start = Clock::now();
    Matrix left = Matrix::Zero(d, d), right = Matrix::Zero(d, d);
    for (const SweedlerTerm& term : t.entry(g).delta) {
      left += term.coef * t.word_counit(term.left) * t.word(term.right);
      right += term.coef * t.word_counit(term.right) * t.word(term.left);
    }
    const Matrix img = t.image(g);
    out.push_back(finish(make_report("hopf.counit.left", t.spec(), d, w, residual(left, img, w).scaled, tol),
                         t.entry(g).name, start));
    out.push_back(finish(make_report("hopf.counit.right", t.spec(), d, w, residual(right, img, w).scaled, tol),
                         t.entry(g).name, start));
  }
  return out;
}

std::vector<CheckReport> check_antipode(const HopfTables& t, double tol, int degree) {
  std::vector<CheckReport> out;
  const int d = t.dim();
  const TensorWindow w = TensorWindow::per_slot(d, 1, degree);
  for (Generator g : t.generators()) {
    const auto start = Clock::now();
    const GeneratorEntry& e = t.entry(g);
    Matrix left = Matrix::Zero(d, d), right = Matrix::Zero(d, d);
    Matrix inv_left = Matrix::Zero(d, d), inv_right = Matrix::Zero(d, d);
    for (const SweedlerTerm& term : e.delta) {
      const Matrix l = t.word(term.left), r = t.word(term.right);
      left += term.coef * t.word_antipode(term.left) * r;
      right += term.coef * l * t.word_antipode(term.right);
      inv_left += term.coef * t.word_antipode_inv(term.right) * l;
      inv_right += term.coef * r * t.word_antipode_inv(term.left);
    }
    const Matrix unit = e.counit * t.rep().identity();
    out.push_back(finish(make_report("hopf.antipode.left", t.spec(), d, w, residual(left, unit, w).scaled, tol), e.name, start));
    out.push_back(finish(make_report("hopf.antipode.right", t.spec(), d, w, residual(right, unit, w).scaled, tol), e.name, start));
    out.push_back(finish(make_report("hopf.antipode_inv.left", t.spec(), d, w, residual(inv_left, unit, w).scaled, tol), e.name, start));
    out.push_back(finish(make_report("hopf.antipode_inv.right", t.spec(), d, w, residual(inv_right, unit, w).scaled, tol), e.name, start));

    Matrix round_trip = Matrix::Zero(d, d);
    for (const Monomial& m : e.antipode) round_trip += m.coef * t.word_antipode_inv(m.word);
    out.push_back(finish(make_report("hopf.antipode_inv.inverse", t.spec(), d, w,
                                     residual(round_trip, t.image(g), w).scaled, tol),
                         e.name, start));
  }
  return out;
}

std::vector<CheckReport> check_delta_homomorphism(const HopfTables& t, double tol, int degree) {
  std::vector<CheckReport> out;
  const int d = t.dim();
  ImageSet two_site, anti, anti_inv;
  two_site.unit = Matrix::Identity(static_cast<Index>(d) * d, static_cast<Index>(d) * d);
  anti.unit = anti_inv.unit = t.rep().identity();
  anti.reversed = anti_inv.reversed = true;
  for (Generator g : t.generators()) {
    two_site.gens[g] = t.delta(g);
    anti.gens[g] = t.antipode(g);
    anti_inv.gens[g] = t.antipode_inv(g);
  }
  const TensorWindow w2 = TensorWindow::per_slot(d, 2, degree);
  const TensorWindow w1 = TensorWindow::per_slot(d, 1, degree);
  for (const Relation& rel : defining_relations(t.rep().family())) {
    auto start = Clock::now();
    {
      const auto [lhs, rhs] = rel.sides(two_site, t.spec());
      out.push_back(finish(make_report("hopf.delta_homomorphism", t.spec(), d, w2, residual(lhs, rhs, w2).scaled, tol),
                           rel.id, start));
    }
    start = Clock::now();
    {
      const auto [lhs, rhs] = rel.sides(anti, t.spec());
      out.push_back(finish(make_report("hopf.antipode_antihomomorphism", t.spec(), d, w1,
                                       residual(lhs, rhs, w1).scaled, tol),
                           rel.id, start));
    }
    start = Clock::now();
    {
      const auto [lhs, rhs] = rel.sides(anti_inv, t.spec());
      out.push_back(finish(make_report("hopf.antipode_inv_antihomomorphism", t.spec(), d, w1,
                                       residual(lhs, rhs, w1).scaled, tol),
                           rel.id, start));
    }
  }
  return out;
}

}  // namespace bosonhopf
