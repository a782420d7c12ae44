#include "bosonhopf/fock.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bosonhopf/errors.hpp"
#include "bosonhopf/scalars.hpp"

namespace bosonhopf {

std::string to_string(Family f) {
  switch (f) {
    case Family::B: return "B";
    case Family::Bbar: return "Bbar";
    case Family::Bq: return "Bq";
    case Family::Bbarq: return "Bbarq";
    case Family::H: return "H";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  if (name == "B") return Family::B;
  if (name == "Bbar") return Family::Bbar;
  if (name == "Bq") return Family::Bq;
  if (name == "Bbarq") return Family::Bbarq;
  if (name == "H") return Family::H;
  throw std::invalid_argument("unknown family '" + name + "' (expected B, Bbar, Bq, Bbarq or H)");
}

bool is_deformed(Family f) { return f == Family::Bq || f == Family::Bbarq; }

std::string to_string(Basis b) { return b == Basis::unitary ? "unitary" : "unnormalized"; }

Basis basis_from_string(const std::string& name) {
  if (name == "unitary") return Basis::unitary;
  if (name == "unnormalized") return Basis::unnormalized;
  throw std::invalid_argument("unknown basis '" + name + "' (expected unitary or unnormalized)");
}

AlgebraSpec AlgebraSpec::b(double alpha, double beta, Basis basis) {
  AlgebraSpec s;
  s.family = Family::B;
  s.alpha = alpha;
  s.beta = beta;
  s.basis = basis;
  return s;
}

AlgebraSpec AlgebraSpec::bbar(double sigma, double tau, Basis basis) {
  AlgebraSpec s;
  s.family = Family::Bbar;
  s.sigma = sigma;
  s.tau = tau;
  s.basis = basis;
  return s;
}

AlgebraSpec AlgebraSpec::bq(double alpha, double beta, double q, Basis basis) {
  AlgebraSpec s = b(alpha, beta, basis);
  s.family = Family::Bq;
  s.q = q;
  return s;
}

AlgebraSpec AlgebraSpec::bbarq(double sigma, double tau, double q, Basis basis) {
  AlgebraSpec s = bbar(sigma, tau, basis);
  s.family = Family::Bbarq;
  s.q = q;
  return s;
}

AlgebraSpec AlgebraSpec::h(double delta, double nu, double rho, Basis basis) {
  AlgebraSpec s;
  s.family = Family::H;
  s.delta = delta;
  s.nu = nu;
  s.rho = rho;
  s.basis = basis;
  return s;
}

double AlgebraSpec::distinguished_rho(double delta, double nu) { return -(nu - delta + 1.0) / (2.0 * delta); }

std::map<std::string, double> AlgebraSpec::parameters() const {
  switch (family) {
    case Family::B: return {{"alpha", alpha}, {"beta", beta}};
    case Family::Bq: return {{"alpha", alpha}, {"beta", beta}, {"q", q}};
    case Family::Bbar: return {{"sigma", sigma}, {"tau", tau}};
    case Family::Bbarq: return {{"sigma", sigma}, {"tau", tau}, {"q", q}};
    case Family::H: return {{"delta", delta}, {"nu", nu}, {"rho", rho}};
  }
  return {};
}

std::string AlgebraSpec::label() const {
  std::ostringstream os;
  os << to_string(family) << '(';
  bool first = true;
  for (const auto& [k, v] : parameters()) {
    if (!first) os << ", ";
    os << k << '=' << v;
    first = false;
  }
  os << ')';
  if (basis == Basis::unitary) os << " unitary";
  return os.str();
}

double AlgebraSpec::shift() const {
  // A vanishing divisor leaves the grade element as (-1)^N.
  switch (family) {
    case Family::B:
    case Family::Bq: return alpha == 0.0 ? 0.0 : beta / alpha;
    case Family::Bbar:
    case Family::Bbarq: return sigma == 0.0 ? 0.0 : tau / sigma;
    case Family::H: return (nu - delta + 1.0) / (2.0 * delta) + 0.5;
  }
  return 0.0;
}

bool AlgebraSpec::unitary_allowed() const {
  switch (family) {
    case Family::B:
    case Family::Bq: return alpha > 0 && beta > 0;
    case Family::Bbar:
    case Family::Bbarq: return sigma >= 0 && tau >= 0;
    case Family::H: return delta > 0 && nu > 0;
  }
  return false;
}

double weight(const AlgebraSpec& s, int n) {
  if (n < 1) throw std::invalid_argument("weight needs n >= 1");
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^{n+1}
  switch (s.family) {
    case Family::B: return s.alpha * n / 2.0 + (2.0 * s.beta - s.alpha) / 4.0 * (1.0 + sign);
    case Family::Bbar: return s.sigma * n * (n - 1) / 2.0 + n * s.tau;
    case Family::Bq: {
      const QValue q(s.q);
      const double half = s.alpha / 2.0;
      const double pre = std::pow(s.q, half) + std::pow(s.q, -half);
      return (sign * q_bracket(s.beta - half, q) + q_bracket(n * s.alpha + s.beta - half, q)) / pre;
    }
    case Family::Bbarq: {
      const QValue q(s.q);
      const double norm = q_bracket(s.sigma / 2.0, q);
      if (norm == 0.0) throw std::invalid_argument("Bbarq weight needs [sigma/2]_q != 0");
      return q_bracket(s.sigma * n / 2.0, q) * q_bracket(s.sigma * (n - 1) / 2.0 + s.tau, q) / norm;
    }
    case Family::H:
      return s.delta * n + (s.nu - s.delta + 1.0) / 2.0 * (1.0 + sign);
  }
  return 0.0;
}

FockRep::FockRep(AlgebraSpec spec, int dim) : spec_(spec), dim_(dim) {
  if (dim < 2) throw std::invalid_argument("Fock truncation needs dim >= 2");
  if (is_deformed(spec_.family) && !QValue::valid(spec_.q))
    throw std::invalid_argument("q must satisfy q > 0 and q != 1, got " + std::to_string(spec_.q));
  if (spec_.family == Family::H) {
    if (spec_.delta == 0.0) throw ProvisoError("delta != 0", "the number element M does not exist if delta = 0");
    if (spec_.nu == 0.0) throw ProvisoError("nu != 0", "K is normalized by (nu - delta + 1)/nu; needs nu != 0");
  }
  const bool unitary = spec_.basis == Basis::unitary;
  if (unitary && !spec_.unitary_allowed())
    throw std::invalid_argument("unitary basis needs the family positivity condition: " + spec_.label());

  weights_.resize(static_cast<std::size_t>(dim));
  for (int n = 1; n <= dim; ++n) {
    const double w = weight(spec_, n);
    if (unitary && !(w > 0.0))
      throw std::invalid_argument("unitary basis needs positive weights; weight(" + std::to_string(n) +
                                  ") = " + std::to_string(w));
    weights_[static_cast<std::size_t>(n - 1)] = w;
  }

  shift_ = spec_.shift();
  lowering_ = Matrix::Zero(dim, dim);
  raising_ = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) {
    const double w = weights_[static_cast<std::size_t>(n - 1)];
    lowering_(n - 1, n) = unitary ? std::sqrt(w) : w;
    raising_(n, n - 1) = unitary ? std::sqrt(w) : 1.0;
  }
  if (unitary) raising_ = lowering_.adjoint();

  const double number_offset =
      spec_.family == Family::H ? (spec_.nu - spec_.delta + 1.0) / (2.0 * spec_.delta) + spec_.rho : 0.0;
  number_ = Matrix::Zero(dim, dim);
  grade_plus_ = Matrix::Zero(dim, dim);
  grade_minus_ = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    number_(n, n) = n + number_offset;
    grade_plus_(n, n) = phase_pow(n + shift_);
    grade_minus_(n, n) = phase_pow(-(n + shift_));
  }
  if (spec_.family == Family::H) {
    k_op_ = Matrix::Zero(dim, dim);
    const double c = (spec_.nu - spec_.delta + 1.0) / spec_.nu;
    for (int n = 0; n < dim; ++n) k_op_(n, n) = (n % 2 == 0) ? c : -c;
  }
}

const Matrix& FockRep::k_op() const {
  if (!has_k_op()) throw std::logic_error("K exists only in the H family");
  return k_op_;
}

Matrix FockRep::diagonal(const std::function<Complex(double)>& f) const {
  Matrix out = Matrix::Zero(dim_, dim_);
  for (int n = 0; n < dim_; ++n) out(n, n) = f(n + shift_);
  return out;
}

FockRep build_rep(const AlgebraSpec& spec, int dim) { return FockRep(spec, dim); }

ValidityWindow validity_window(const FockRep& rep, int raise_degree) {
  if (raise_degree < 0 || raise_degree >= rep.dim())
    throw std::invalid_argument("validity window degree must satisfy 0 <= d < dim");
  ValidityWindow w;
  w.raise_degree = raise_degree;
  w.kept = rep.dim() - raise_degree;
  w.projector = Matrix::Zero(rep.dim(), rep.dim());
  for (int n = 0; n < w.kept; ++n) w.projector(n, n) = 1.0;
  return w;
}

}  // namespace bosonhopf
