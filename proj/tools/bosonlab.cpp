#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "bosonhopf/errors.hpp"
#include "bosonhopf/expr.hpp"
#include "bosonhopf/hopf.hpp"
#include "bosonhopf/report.hpp"
#include "bosonlab/config.hpp"
#include "bosonlab/runner.hpp"
#include "json.hpp"

namespace {

using namespace bosonhopf;

constexpr int kUsageError = 2;

struct EvalArgs {
  std::string family = "B";
  std::optional<double> alpha, beta, sigma, tau, delta, nu, rho, q;
  int dim = 8;
  int window = 2;
  std::string basis = "unnormalized";
  bool dump = false;
  std::string text;
};

AlgebraSpec eval_spec(const EvalArgs& a) {
  auto need = [](const std::optional<double>& v, const char* name) {
    if (!v) throw std::invalid_argument(std::string("--") + name + " is required for this family");
    return *v;
  };
  const Basis basis = basis_from_string(a.basis);
  switch (family_from_string(a.family)) {
    case Family::B: return AlgebraSpec::b(need(a.alpha, "alpha"), need(a.beta, "beta"), basis);
    case Family::Bq: return AlgebraSpec::bq(need(a.alpha, "alpha"), need(a.beta, "beta"), need(a.q, "q"), basis);
    case Family::Bbar: return AlgebraSpec::bbar(need(a.sigma, "sigma"), need(a.tau, "tau"), basis);
    case Family::Bbarq: return AlgebraSpec::bbarq(need(a.sigma, "sigma"), need(a.tau, "tau"), need(a.q, "q"), basis);
    case Family::H: return AlgebraSpec::h(need(a.delta, "delta"), need(a.nu, "nu"), a.rho.value_or(0.0), basis);
  }
  throw std::logic_error("unreachable");
}

int eval_command(const EvalArgs& a) {
  const AlgebraSpec spec = eval_spec(a);
  const FockRep rep = build_rep(spec, a.dim);
  std::optional<HopfTables> tables;
  try {
    tables.emplace(build_tables(rep));
  } catch (const ProvisoError&) {
    // coproduct and antipode report the missing tables if used
  }
  const EvalContext ctx = EvalContext::of(rep, tables ? &*tables : nullptr);
  const auto [lhs, rhs] = parse_identity(a.text);
  const Value lv = evaluate_value(*lhs, ctx);
  const Value rv = evaluate_value(*rhs, ctx);
  const int sites = std::max({1, lv.sites, rv.sites});
  Index n = 1;
  for (int i = 0; i < sites; ++i) n *= a.dim;
  auto as_matrix = [&](const Value& v) { return v.is_scalar() ? Matrix(v.scalar() * Matrix::Identity(n, n)) : v.matrix(); };
  if (!lv.is_scalar() && !rv.is_scalar() && lv.sites != rv.sites)
    throw EvalError("identity sides act on " + std::to_string(lv.sites) + " and " + std::to_string(rv.sites) + " sites");
  const Matrix m = as_matrix(lv) - as_matrix(rv);
  const TensorWindow w = TensorWindow::per_slot(a.dim, sites, a.window);
  std::printf("algebra: %s, D = %d, basis %s\n", spec.label().c_str(), a.dim, to_string(spec.basis).c_str());
  std::printf("expression: %s%s\n", print(*lhs).c_str(), rhs->kind == Expr::Kind::number && rhs->number == 0 ? "" : (" = " + print(*rhs)).c_str());
  std::printf("sites: %d\n", sites);
  std::printf("norm: %.6e\n", spectral_norm(m));
  std::printf("windowed norm (%s): %.6e\n", w.describe().c_str(), windowed_norm(m, w));
  if (a.dump) {
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (Index i = 0; i < m.rows(); ++i) {
      nlohmann::json r = nlohmann::json::array(), c = nlohmann::json::array();
      for (Index j = 0; j < m.cols(); ++j) {
        r.push_back(m(i, j).real());
        c.push_back(m(i, j).imag());
      }
      re.push_back(r);
      im.push_back(c);
    }
    std::cout << nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"sites", sites}, {"re", re}, {"im", im}}.dump()
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bosonlab: numerical certification of generalized boson Hopf algebras"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  bosonlab::RunOptions opt;
  auto* run = app.add_subcommand("run", "run the suites of a scenario config and write a JSON report");
  run->add_option("--config", config_path, "scenario config file")->required();
  run->add_option("--out", out_path, "report path (default: the config's output key, else stdout)");
  run->add_option("--dim", opt.dim, "override every truncation dimension")->check(CLI::Range(2, 64));
  run->add_option("--tol", opt.tol, "override every tolerance")->check(CLI::PositiveNumber);
  run->add_option("--jobs", opt.jobs, "worker threads (default: available parallelism)")->check(CLI::Range(1, 1024));

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate an expression or identity on a representation");
  eval->add_option("--family", ea.family, "B, Bbar, Bq, Bbarq or H")->required();
  eval->add_option("--alpha", ea.alpha);
  eval->add_option("--beta", ea.beta);
  eval->add_option("--sigma", ea.sigma);
  eval->add_option("--tau", ea.tau);
  eval->add_option("--delta", ea.delta);
  eval->add_option("--nu", ea.nu);
  eval->add_option("--rho", ea.rho);
  eval->add_option("--q", ea.q);
  eval->add_option("--dim", ea.dim, "truncation dimension")->check(CLI::Range(2, 64));
  eval->add_option("--window", ea.window, "per-slot window degree")->check(CLI::Range(0, 63));
  eval->add_option("--basis", ea.basis, "unnormalized or unitary");
  eval->add_flag("--dump-matrix", ea.dump, "print the full matrix as JSON");
  eval->add_option("expr", ea.text, "expression, or 'lhs = rhs'")->required();

  auto* list = app.add_subcommand("list-identities", "print the identity catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (list->parsed()) {
    for (const IdentityInfo& info : identity_catalog())
      std::printf("%-40s %-10s %s\n", info.id.c_str(), info.suite.c_str(), info.formula.c_str());
    return 0;
  }

  if (eval->parsed()) {
    try {
      return eval_command(ea);
    } catch (const ParseError& e) {
      std::fprintf(stderr, "parse error at %s\n", e.what());
      return kUsageError;
    } catch (const std::exception& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return kUsageError;
    }
  }

  bosonlab::RunConfig cfg;
  try {
    cfg = bosonlab::load_config(config_path);
  } catch (const bosonlab::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kUsageError;
  }
  const bosonlab::RunResult result = bosonlab::run(cfg, opt);
  for (const std::string& w : result.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  const std::string doc = bosonlab::render(result);
  const std::string target = out_path.empty() ? cfg.output : out_path;
  if (target.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(target, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "error: cannot write '%s'\n", target.c_str());
      return kUsageError;
    }
    out << doc;
  }
  std::fprintf(stderr, "%d passed, %d failed, %d skipped\n", result.passed, result.failed, result.skipped);
  return result.exit_code();
}
