#include "bosonhopf/report.hpp"

#include <cmath>
#include <stdexcept>

namespace bosonhopf {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "?";
}

namespace {

std::vector<IdentityInfo> build_catalog() {
  std::vector<IdentityInfo> c = {
      {"relations.B.anticommutator", "relations", "{a, a+} = alpha N + beta"},
      {"relations.Bbar.commutator", "relations", "[a, a+] = sigma N + tau"},
      {"relations.Bq.anticommutator", "relations", "{a, a+} = [alpha N + beta]_q"},
      {"relations.Bbarq.commutator", "relations", "[a, a+] = [sigma N + tau]_q"},
      {"relations.H.commutator", "relations", "[b, b+] = delta + nu K"},
      {"relations.H.k_lower", "relations", "{K, b} = 0"},
      {"relations.H.k_raise", "relations", "{K, b+} = 0"},
      {"relations.H.grade_k", "relations", "g K g^-1 = K"},
  };
  for (const char* f : {"B", "Bbar", "Bq", "Bbarq", "H"}) {
    const std::string p = std::string("relations.") + f;
    c.push_back({p + ".number_lower", "relations", "[N, a] = -a"});
    c.push_back({p + ".number_raise", "relations", "[N, a+] = a+"});
  }
  for (const char* f : {"B", "Bq", "H"}) {
    const std::string p = std::string("relations.") + f;
    c.push_back({p + ".grade_lower", "relations", "{g, a} = 0"});
    c.push_back({p + ".grade_raise", "relations", "{g, a+} = 0"});
    c.push_back({p + ".grade_number", "relations", "[g, N] = 0"});
    c.push_back({p + ".grade_inverse", "relations", "g g^-1 = 1"});
  }
  const std::vector<IdentityInfo> rest = {
      {"hopf.coassociativity", "hopf", "(Delta x id) Delta(x) = (id x Delta) Delta(x)"},
      {"hopf.counit.left", "hopf", "(eps x id) Delta(x) = x"},
      {"hopf.counit.right", "hopf", "(id x eps) Delta(x) = x"},
      {"hopf.antipode.left", "hopf", "m (S x id) Delta(x) = eps(x) 1"},
      {"hopf.antipode.right", "hopf", "m (id x S) Delta(x) = eps(x) 1"},
      {"hopf.antipode_inv.left", "hopf", "m (S^-1 x id) Delta^op(x) = eps(x) 1"},
      {"hopf.antipode_inv.right", "hopf", "m (id x S^-1) Delta^op(x) = eps(x) 1"},
      {"hopf.antipode_inv.inverse", "hopf", "S(S^-1(x)) = x"},
      {"hopf.delta_homomorphism", "delta-hom", "Delta preserves the defining relations"},
      {"hopf.antipode_antihomomorphism", "delta-hom", "S preserves the defining relations with reversed products"},
      {"hopf.antipode_inv_antihomomorphism", "delta-hom", "S^-1 preserves the defining relations with reversed products"},
      {"rmatrix.quasitriangular", "rmatrix", "R Delta(x) R^-1 = Delta^op(x)"},
      {"rmatrix.fusion_left", "rmatrix", "(Delta x id) R = R13 R23"},
      {"rmatrix.fusion_right", "rmatrix", "(id x Delta) R = R13 R12"},
      {"rmatrix.inverse", "rmatrix", "(S x id) R = R^-1"},
      {"rmatrix.ybe", "ybe", "R12 R13 R23 = R23 R13 R12"},
      {"rmatrix.classical_limit", "rmatrix", "R(q) -> R0 as q -> 1"},
      {"rmatrix.branch_diagnosis", "rmatrix", "best quasitriangularity residual over recorded branches"},
      {"structure.L_anticomm_lower", "structure", "{L+, a} = 0"},
      {"structure.L_anticomm_raise", "structure", "{L+, a+} = 0"},
      {"structure.Lplus_coproduct", "structure", "Delta(L+) closed form"},
      {"structure.Lplus_coproduct_anticomm", "structure", "{Delta(L+), Delta(a)} = 0"},
      {"structure.Lplus_counit", "structure", "eps(L+) = lambda_1 alpha/4 + lambda_4"},
      {"structure.Lplus_antipode", "structure", "S(L+) = L+ provided (-1)^{2N~} = I"},
      {"structure.Lplus_antipode_general", "structure", "S(L+) = L + lambda_4 g^-1"},
      {"structure.characteristic_identity", "structure", "C (C + alpha/2 - beta) + (alpha/4 - beta/2)^2 = eta/lambda_1^2"},
      {"structure.M_number", "structure", "M = number operator of H"},
      {"structure.M_lower", "structure", "[M, b] = -b"},
      {"structure.M_raise", "structure", "[M, b+] = b+"},
      {"structure.H_anticommutator", "structure", "{b, b+} = 2 delta M + delta (1 - 2 rho)"},
      {"structure.bh_form", "structure", "[a, a+] = -(2/lambda_1) L + alpha/2"},
      {"realization.bracket", "structure", "{e, f} = h or [e, f] = h (q-bracket for deformed targets)"},
      {"realization.h_e", "structure", "[h, e] = k e"},
      {"realization.h_f", "structure", "[h, f] = -k f"},
      {"casimir.osp_i2", "casimir", "I2 = i2 on the Fock module"},
      {"casimir.sl2_c2", "casimir", "C2 = c_n, constant on each parity sector"},
      {"iso.phi.iff", "iso", "phi: B -> H is a homomorphism iff alpha = 2 delta"},
      {"iso.phi.L", "iso", "phi(L) = -(lambda_1 nu / 2) K"},
      {"iso.phi_prime.iff", "iso", "phi': H -> B is a homomorphism iff alpha = 2 delta"},
      {"iso.phi_prime.M", "iso", "phi'(M) = N + (beta - delta)/(2 delta) + rho"},
      {"iso.round_trip.N", "iso", "phi'(phi(N)) = N"},
      {"iso.round_trip.K", "iso", "phi(phi'(K)) = K"},
      {"expr.identity", "expr", "expression-language identity: lhs = rhs"},
      {"runner.proviso", "runner", "grid point or suite outside a stated proviso; skipped"},
      {"runner.not_applicable", "runner", "suite has no content for this family; skipped"},
      {"runner.error", "runner", "computational error while running a suite"},
  };
  c.insert(c.end(), rest.begin(), rest.end());
  return c;
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> catalog = build_catalog();
  return catalog;
}

const IdentityInfo& lookup_identity(const std::string& id) {
  for (const IdentityInfo& info : identity_catalog())
    if (info.id == id) return info;
  throw std::logic_error("identity id missing from catalog: " + id);
}

namespace {

CheckReport stamp(const std::string& id, const AlgebraSpec& spec, int dim) {
  CheckReport r;
  r.identity = id;
  r.reference = lookup_identity(id).formula;
  r.family = to_string(spec.family);
  r.parameters = spec.parameters();
  r.basis = to_string(spec.basis);
  r.dim = dim;
  return r;
}

}  // namespace

CheckReport make_report(const std::string& id, const AlgebraSpec& spec, int dim, const TensorWindow& window,
                        double residual, double tol) {
  CheckReport r = stamp(id, spec, dim);
  r.window = window.describe();
  r.window_degree = window.degree;
  r.residual = residual;
  r.tolerance = tol;
  r.status = residual < tol ? Status::pass : Status::fail;  // NaN compares false
  return r;
}

CheckReport make_skip(const std::string& id, const AlgebraSpec& spec, int dim, const std::string& reason) {
  CheckReport r = stamp(id, spec, dim);
  r.status = Status::skip;
  r.message = reason;
  return r;
}

}  // namespace bosonhopf
