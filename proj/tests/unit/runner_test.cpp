#include <gtest/gtest.h>

#include <sstream>

#include "bosonhopf/expr.hpp"
#include "bosonlab/config.hpp"
#include "bosonlab/runner.hpp"

using namespace bosonlab;
using bosonhopf::Family;
using bosonhopf::Status;

namespace {

RunConfig cfg(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in, "test.ini");
}

std::string config_error(const std::string& text) {
  try {
    cfg(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

nlohmann::json strip_wall(nlohmann::json j) {
  for (auto& row : j["reports"]) row.erase("wall_ms");
  return j;
}

}  // namespace

TEST(GridExpand, CartesianProduct) {
  const RunConfig c = cfg("[scenario s]\nfamily = B\nalpha = 2, 4\nbeta = 1, 2\nsuites = relations\n");
  const auto pts = grid_expand(c.scenarios.at(0));
  ASSERT_EQ(pts.size(), 4u);
  // last parameter varies fastest
  EXPECT_EQ(pts[0].spec.alpha, 2);
  EXPECT_EQ(pts[0].spec.beta, 1);
  EXPECT_EQ(pts[1].spec.alpha, 2);
  EXPECT_EQ(pts[1].spec.beta, 2);
  EXPECT_EQ(pts[3].spec.alpha, 4);
  for (const GridPoint& p : pts) EXPECT_FALSE(p.skip_reason);
}

TEST(GridExpand, UndeformedFamilyIgnoresQ) {
  const RunConfig c = cfg("[scenario s]\nfamily = Bbar\nsigma = 1\ntau = 0\nq = 0.7, 1.3\nsuites = relations\n");
  const Scenario& s = c.scenarios.at(0);
  ASSERT_EQ(s.warnings.size(), 1u);
  EXPECT_NE(s.warnings[0].find("undeformed"), std::string::npos);
  EXPECT_EQ(grid_expand(s).size(), 1u);
}

TEST(GridExpand, DeltaZeroIsSkippedWithCitation) {
  const RunConfig c = cfg("[scenario s]\nfamily = H\ndelta = 0\nnu = 0.5\nsuites = relations\n");
  const auto pts = grid_expand(c.scenarios.at(0));
  ASSERT_EQ(pts.size(), 1u);
  ASSERT_TRUE(pts[0].skip_reason);
  EXPECT_NE(pts[0].skip_reason->find("does not exist if delta = 0"), std::string::npos);
}

TEST(Config, Errors) {
  EXPECT_NE(config_error("[scenario s]\nfamily = X\nsuites = relations\n").find("test.ini:2"), std::string::npos);
  EXPECT_NE(config_error("[scenario s]\nfamily = B\nalpha = 2\nbeta = 1\nsuites = nope\n").find("unknown suite"),
            std::string::npos);
  EXPECT_NE(config_error("[scenario s]\nfamily = B\nalpha = two\nbeta = 1\nsuites = relations\n").find("expects a number"),
            std::string::npos);
  EXPECT_NE(config_error("[scenario s]\nfamily = B\nalpha = 2\nsuites = relations\n").find("needs parameter 'beta'"),
            std::string::npos);
  EXPECT_NE(config_error("jobs = 2\n").find("no [scenario"), std::string::npos);
  EXPECT_NE(config_error("colour = red\n[scenario s]\nfamily = B\n").find("unknown global key"), std::string::npos);
  EXPECT_NE(config_error("[scenario s]\nfamily = B\nalpha = 2\nbeta = 1\nsuites = relations\nwobble = 1\n")
                .find("unknown scenario key"),
            std::string::npos);
  EXPECT_THROW(load_config("/nonexistent/config.ini"), ConfigError);
}

TEST(Config, OverridesAndGlobals) {
  const RunConfig c = cfg(
      "jobs = 3\nybe_jobs = 2\noutput = out.json\n[scenario s]\nfamily = H\ndelta = 1\nnu = 0.5\n"
      "suites = relations, iso\ndim = 10\ndim.relations = 12\ntol.iso = 1e-9\niso.alpha = 2\niso.beta = 1\n");
  EXPECT_EQ(c.jobs.value(), 3);
  EXPECT_EQ(c.ybe_jobs, 2);
  EXPECT_EQ(c.output, "out.json");
  const Scenario& s = c.scenarios.at(0);
  EXPECT_EQ(s.dim.value(), 10);
  EXPECT_EQ(s.suite_dims.at("relations"), 12);
  EXPECT_EQ(s.suite_tols.at("iso"), 1e-9);
  EXPECT_EQ(s.iso.at("alpha"), 2);
  // rho defaults to 0 for H
  EXPECT_EQ(grid_expand(s).at(0).spec.rho, 0);
}

TEST(Runner, BFamilyRelationsPass) {
  const RunResult r = run(cfg("[scenario s]\nfamily = B\nalpha = 2\nbeta = 1\nsuites = relations\ndim = 16\n"));
  EXPECT_GT(r.passed, 0);
  EXPECT_EQ(r.failed, 0);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Runner, NonIntegerRatioSkipsRMatrix) {
  const RunResult r = run(cfg("[scenario s]\nfamily = Bq\nalpha = 2\nbeta = 3\nq = 1.3\nsuites = rmatrix\ndim = 6\n"));
  EXPECT_EQ(r.failed, 0);
  EXPECT_GT(r.skipped, 0);
  EXPECT_EQ(r.exit_code(), 0);
  for (const ReportRow& row : r.rows)
    if (row.report.status == Status::skip) EXPECT_NE(row.report.message.find("(-1)^{2N~}=I"), std::string::npos);
}

TEST(Runner, AlphaZeroHopfIsSkippedWithProviso) {
  const RunResult r = run(cfg("[scenario s]\nfamily = B\nalpha = 0\nbeta = 1\nsuites = hopf\ndim = 6\n"));
  EXPECT_EQ(r.failed, 0);
  ASSERT_GT(r.skipped, 0);
  for (const ReportRow& row : r.rows) {
    EXPECT_EQ(row.report.identity, "runner.proviso");
    EXPECT_NE(row.report.message.find("provided that alpha != 0"), std::string::npos);
  }
}

TEST(Runner, FailureSetsExitCodeAndRowsAreSorted) {
  const RunResult r = run(cfg("[scenario z]\nfamily = B\nalpha = 2\nbeta = 1\nsuites = relations\ntol = 0\n"
                              "[scenario a]\nfamily = Bbar\nsigma = 1\ntau = 1\nsuites = hopf, relations\n"));
  EXPECT_GT(r.failed, 0);
  EXPECT_EQ(r.exit_code(), 1);
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    const ReportRow& x = r.rows[i - 1];
    const ReportRow& y = r.rows[i];
    EXPECT_LE(std::tie(x.scenario, x.suite, x.report.identity, x.report.subject, x.point),
              std::tie(y.scenario, y.suite, y.report.identity, y.report.subject, y.point));
  }
}

TEST(Runner, DeterministicAcrossJobCounts) {
  const RunConfig c = cfg("[scenario s]\nfamily = B\nalpha = 2, 4\nbeta = 1, 2\nsuites = relations, hopf\ndim = 6\n");
  RunOptions one, many;
  one.jobs = 1;
  many.jobs = 4;
  const auto a = strip_wall(to_json(run(c, one)));
  const auto b = strip_wall(to_json(run(c, many)));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["schema_version"], kSchemaVersion);
  EXPECT_EQ(a["grammar_version"], bosonhopf::kGrammarVersion);
}

TEST(Runner, EveryReportIdIsCatalogued) {
  const RunResult r = run(cfg(
      "[scenario b]\nfamily = B\nalpha = 2\nbeta = 2\nsuites = relations, hopf, delta-hom, rmatrix, ybe, casimir, "
      "structure, iso\niso.delta = 1\niso.nu = 0.5\ndim = 6\n"
      "[scenario h]\nfamily = H\ndelta = 1\nnu = 0.5\nsuites = relations, hopf, structure, iso, rmatrix\n"
      "iso.alpha = 2\niso.beta = 1\ndim = 6\n"));
  for (const ReportRow& row : r.rows) {
    EXPECT_NO_THROW(bosonhopf::lookup_identity(row.report.identity)) << row.report.identity;
    EXPECT_FALSE(row.report.reference.empty());
  }
  EXPECT_EQ(r.failed, 0);
}

TEST(Runner, NanIsSerializedAsNull) {
  bosonhopf::CheckReport rep;
  rep.identity = "runner.error";
  const nlohmann::json j = to_json(rep);
  EXPECT_TRUE(j["residual"].is_null());
}

TEST(Runner, Defaults) {
  EXPECT_EQ(default_tolerance("relations", Family::B), 1e-10);
  EXPECT_EQ(default_tolerance("rmatrix", Family::Bq), 1e-8);
  EXPECT_EQ(default_dim("relations", Family::H), 16);
}
