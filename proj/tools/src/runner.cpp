#include "bosonlab/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <semaphore>
#include <sstream>
#include <thread>

#include "bosonhopf/errors.hpp"
#include "bosonhopf/expr.hpp"
#include "bosonhopf/hopf.hpp"
#include "bosonhopf/relations.hpp"
#include "bosonhopf/rmatrix.hpp"
#include "bosonhopf/structure.hpp"

namespace bosonlab {

using namespace bosonhopf;

double default_tolerance(const std::string& suite, Family f) {
  if (suite == "rmatrix") return 1e-8;
  if (suite == "ybe") return f == Family::B ? 1e-12 : 1e-8;
  return 1e-10;
}

int default_dim(const std::string& suite, Family f) {
  if (suite == "relations") return 16;
  if (suite == "ybe") return f == Family::B ? 4 : 6;
  if (suite == "structure") return 12;
  return 8;
}

namespace {

using Clock = std::chrono::steady_clock;

double tolerance(const Scenario& s, const std::string& suite, const RunOptions& opt) {
  if (opt.tol) return *opt.tol;
  if (auto it = s.suite_tols.find(suite); it != s.suite_tols.end()) return it->second;
  if (s.tol) return *s.tol;
  return default_tolerance(suite, s.family);
}

int dimension(const Scenario& s, const std::string& suite, const RunOptions& opt) {
  if (opt.dim) return *opt.dim;
  if (auto it = s.suite_dims.find(suite); it != s.suite_dims.end()) return it->second;
  if (s.dim) return *s.dim;
  return default_dim(suite, s.family);
}

FockRep make_rep(const Scenario& s, AlgebraSpec spec, int dim) {
  switch (s.basis) {
    case BasisMode::unnormalized: spec.basis = Basis::unnormalized; return build_rep(spec, dim);
    case BasisMode::unitary: spec.basis = Basis::unitary; return build_rep(spec, dim);
    case BasisMode::automatic:
      if (spec.unitary_allowed()) {
        spec.basis = Basis::unitary;
        try {
          return build_rep(spec, dim);
        } catch (const ProvisoError&) {
          throw;
        } catch (const std::invalid_argument&) {
          // a vanishing weight; fall back
        }
      }
      spec.basis = Basis::unnormalized;
      return build_rep(spec, dim);
  }
  return build_rep(spec, dim);
}

void append(std::vector<CheckReport>& out, std::vector<CheckReport> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

CheckReport not_applicable(const GridPoint& p, int dim, const std::string& suite, const std::string& why) {
  CheckReport r = make_skip("runner.not_applicable", p.spec, dim, why);
  r.subject = suite;
  return r;
}

CheckReport classical_limit_report(const AlgebraSpec& spec, int dim, double tol) {
  const auto start = Clock::now();
  const std::vector<double> qs = {1.1, 1.01, 1.001};
  const auto pts = classical_limit(spec, dim, qs);
  bool monotone = true;
  for (std::size_t i = 1; i < pts.size(); ++i) monotone = monotone && pts[i].distance < pts[i - 1].distance;
  const double final_distance = pts.back().distance;
  CheckReport r = make_report("rmatrix.classical_limit", spec, dim, TensorWindow::total(dim, 2, kRWindowDegree),
                              monotone ? final_distance : std::numeric_limits<double>::infinity(), tol);
  std::ostringstream os;
  os << "||R(q) - R0|| at q = ";
  for (std::size_t i = 0; i < pts.size(); ++i)
    os << (i ? ", " : "") << pts[i].q << ": " << pts[i].distance << " (unwindowed " << pts[i].full_distance << ")";
  if (!monotone) os << "; not monotone";
  r.message = os.str();
  r.subject = "R(q) -> R0";
  r.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

CheckReport branch_report(const HopfTables& t, double tol) {
  const BranchDiagnosis d = diagnose_branches(t, tol);
  double best = std::numeric_limits<double>::infinity();
  for (const BranchRow& row : d.rows) best = std::min(best, row.max_residual);
  CheckReport r = make_report("rmatrix.branch_diagnosis", t.spec(), t.dim(), TensorWindow::total(t.dim(), 2, kRWindowDegree),
                              best, tol);
  r.subject = "all branches";
  r.message = d.table();
  return r;
}

std::vector<CheckReport> suite_body(const Scenario& s, const GridPoint& p, const std::string& suite, int dim,
                                    double tol) {
  const Family f = s.family;
  std::vector<CheckReport> out;
  if (suite == "relations") return check_defining_relations(make_rep(s, p.spec, dim), tol);
  if (suite == "hopf" || suite == "delta-hom") {
    const FockRep rep = make_rep(s, p.spec, dim);
    const HopfTables t = build_tables(rep);
    if (suite == "delta-hom") return check_delta_homomorphism(t, tol);
    append(out, check_coassociativity(t, tol));
    append(out, check_counit(t, tol));
    append(out, check_antipode(t, tol));
    return out;
  }
  if (suite == "rmatrix") {
    if (f == Family::H) return {not_applicable(p, dim, suite, "no R-matrix is given for the H family")};
    const FockRep rep = make_rep(s, p.spec, dim);
    const HopfTables t = build_tables(rep);
    switch (f) {
      case Family::B: append(out, check_r_axioms(build_r0(rep), t, tol)); break;
      case Family::Bbar: append(out, check_r_axioms(trivial_r(rep), t, tol)); break;
      case Family::Bq:
        append(out, check_r_axioms(build_r(rep), t, tol));
        out.push_back(classical_limit_report(p.spec, dim, 0.05));
        break;
      case Family::Bbarq: {
        const RMatrix r = build_r(rep);
        append(out, check_r_axioms(r, t, tol));
        out.push_back(branch_report(t, tol));
        break;
      }
      case Family::H: break;
    }
    return out;
  }
  if (suite == "ybe") {
    if (f == Family::H) return {not_applicable(p, dim, suite, "no R-matrix is given for the H family")};
    const FockRep rep = make_rep(s, p.spec, dim);
    switch (f) {
      case Family::B: return {check_ybe(build_r0(rep), tol)};
      case Family::Bbar: return {check_ybe(trivial_r(rep), tol)};
      default: return {check_ybe(build_r(rep), tol)};
    }
  }
  if (suite == "casimir") {
    if (f != Family::B) return {not_applicable(p, dim, suite, "Casimir spectra are tabulated for the B family")};
    const FockRep rep = make_rep(s, p.spec, dim);
    const RealizationMap osp = build_realization(rep, Target::osp12, tol);
    const RealizationMap sl = build_realization(rep, Target::sl2, tol);
    return {casimir_spectrum(osp, CasimirKind::osp_i2, tol), casimir_spectrum(sl, CasimirKind::sl2_c2, tol)};
  }
  if (suite == "structure") {
    const FockRep rep = make_rep(s, p.spec, dim);
    switch (f) {
      case Family::B: {
        const HopfTables t = build_tables(rep);
        append(out, check_L_properties(build_L(rep, s.lambda1, s.lambda4), t, tol));
        out.push_back(characteristic_identity_residual(rep, s.lambda1, tol));
        out.push_back(bh_form_check(rep, s.lambda1, tol));
        append(out, build_realization(rep, Target::sl2, tol).reports);
        break;
      }
      case Family::Bbar: append(out, build_realization(rep, Target::sl2, tol).reports); break;
      case Family::Bq: append(out, build_realization(rep, Target::ospq12, tol).reports); break;
      case Family::Bbarq: append(out, build_realization(rep, Target::slq2, tol).reports); break;
      case Family::H:
        append(out, check_M_properties(rep, tol));
        append(out, build_realization(rep, Target::osp12, tol).reports);
        append(out, build_realization(rep, Target::sl2, tol).reports);
        break;
    }
    return out;
  }
  if (suite == "iso") {
    auto partner = [&](const char* key) {
      auto it = s.iso.find(key);
      if (it == s.iso.end())
        throw std::invalid_argument("scenario '" + s.name + "' runs iso without 'iso." + key + "'");
      return it->second;
    };
    if (f == Family::B) {
      const double rho = s.iso.count("rho") ? s.iso.at("rho") : 0.0;
      return iso_phi(p.spec, AlgebraSpec::h(partner("delta"), partner("nu"), rho), dim, tol, s.lambda1).reports;
    }
    if (f == Family::H)
      return iso_phi_prime(p.spec, AlgebraSpec::b(partner("alpha"), partner("beta")), dim, tol).reports;
    return {not_applicable(p, dim, suite, "the B <-> H isomorphism involves the B and H families only")};
  }
  throw std::logic_error("unknown suite '" + suite + "'");
}

}  // namespace

std::vector<CheckReport> run_suite(const Scenario& s, const GridPoint& p, const std::string& suite,
                                   const RunOptions& opt) {
  const int dim = dimension(s, suite, opt);
  const double tol = tolerance(s, suite, opt);
  if (p.skip_reason) {
    CheckReport r = make_skip("runner.proviso", p.spec, dim, *p.skip_reason);
    r.subject = suite;
    return {r};
  }
  const auto start = Clock::now();
  try {
    return suite_body(s, p, suite, dim, tol);
  } catch (const ProvisoError& e) {
    CheckReport r = make_skip("runner.proviso", p.spec, dim, "proviso " + e.proviso() + ": " + e.what());
    r.subject = suite;
    return {r};
  } catch (const std::exception& e) {
    CheckReport r = make_report("runner.error", p.spec, dim, TensorWindow::full(std::max(dim, 1), 1),
                                std::numeric_limits<double>::quiet_NaN(), tol);
    r.subject = suite;
    r.message = e.what();
    r.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return {r};
  }
}

RunResult run(const RunConfig& cfg, const RunOptions& opt) {
  struct Task {
    const Scenario* scenario;
    GridPoint point;
    std::string suite;
  };
  std::vector<Task> tasks;
  RunResult result;
  for (const Scenario& s : cfg.scenarios) {
    for (const std::string& w : s.warnings) result.warnings.push_back(s.name + ": " + w);
    for (const GridPoint& p : grid_expand(s))
      for (const std::string& suite : s.suites) tasks.push_back({&s, p, suite});
  }

  std::vector<std::vector<CheckReport>> slots(tasks.size());
  const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const int workers = std::max(1, std::min<int>(opt.jobs.value_or(cfg.jobs.value_or(hw)), static_cast<int>(tasks.size())));
  std::counting_semaphore<1024> ybe_gate(std::min(cfg.ybe_jobs, 1024));
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      if (t.suite == "ybe") {
        ybe_gate.acquire();
        slots[i] = run_suite(*t.scenario, t.point, t.suite, opt);
        ybe_gate.release();
      } else {
        slots[i] = run_suite(*t.scenario, t.point, t.suite, opt);
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }

  for (std::size_t i = 0; i < tasks.size(); ++i)
    for (CheckReport& r : slots[i]) result.rows.push_back({tasks[i].scenario->name, tasks[i].suite, tasks[i].point.index, std::move(r)});
  std::stable_sort(result.rows.begin(), result.rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.scenario, a.suite, a.report.identity, a.report.subject, a.point) <
           std::tie(b.scenario, b.suite, b.report.identity, b.report.subject, b.point);
  });
  for (const ReportRow& row : result.rows) {
    switch (row.report.status) {
      case Status::pass: ++result.passed; break;
      case Status::fail: ++result.failed; break;
      case Status::skip: ++result.skipped; break;
    }
  }
  return result;
}

namespace {

nlohmann::json number(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

}  // namespace

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["identity"] = r.identity;
  j["subject"] = r.subject;
  j["reference"] = r.reference;
  j["family"] = r.family;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.parameters) params[k] = number(v);
  j["parameters"] = params;
  j["basis"] = r.basis;
  j["dim"] = r.dim;
  j["window"] = r.window;
  j["window_degree"] = r.window_degree;
  j["residual"] = number(r.residual);
  j["tolerance"] = number(r.tolerance);
  j["status"] = to_string(r.status);
  j["pass"] = r.passed();
  j["branch_note"] = r.branch_note;
  j["message"] = r.message;
  j["wall_ms"] = r.wall_ms;
  return j;
}

nlohmann::json to_json(const RunResult& r) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["artifact_version"] = kArtifactVersion;
  j["grammar_version"] = kGrammarVersion;
  j["summary"] = {{"total", r.rows.size()}, {"pass", r.passed}, {"fail", r.failed}, {"skip", r.skipped}};
  j["warnings"] = r.warnings;
  nlohmann::json rows = nlohmann::json::array();
  for (const ReportRow& row : r.rows) {
    nlohmann::json e = to_json(row.report);
    e["scenario"] = row.scenario;
    e["suite"] = row.suite;
    e["point"] = row.point;
    rows.push_back(std::move(e));
  }
  j["reports"] = std::move(rows);
  return j;
}

std::string render(const RunResult& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace bosonlab
