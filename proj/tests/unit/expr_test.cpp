#include <gtest/gtest.h>

#include <random>

#include "bosonhopf/expr.hpp"
#include "bosonhopf/scalars.hpp"
#include "support.hpp"

using namespace bosonhopf;
using namespace bosonhopf::testing;

namespace {

double windowed(const Matrix& m, int site_dim, int sites, int degree) {
  return windowed_norm(m, TensorWindow::per_slot(site_dim, sites, degree));
}

}  // namespace

TEST(Parse, SpecExamples) {
  const ExprPtr e = parse("acomm(a, ad) - (alpha*N + beta*I)");
  EXPECT_EQ(e->kind, Expr::Kind::sub);
  EXPECT_EQ(e->args[0]->kind, Expr::Kind::call);
  EXPECT_EQ(e->args[0]->name, "acomm");
  EXPECT_EQ(parse("comm(N, a) + a")->kind, Expr::Kind::add);
  const ExprPtr t = parse("tensor(g, g)");
  EXPECT_EQ(t->kind, Expr::Kind::call);
  EXPECT_EQ(t->name, "tensor");
  EXPECT_EQ(t->args.size(), 2u);
}

TEST(Parse, PrecedenceAndAssociativity) {
  EXPECT_TRUE(equal(*parse("a + ad * N ^ 2"), *parse("a + (ad * (N ^ 2))")));
  EXPECT_TRUE(equal(*parse("a - ad - N"), *parse("(a - ad) - N")));
  EXPECT_TRUE(equal(*parse("-a * ad"), *parse("-(a * ad)")) || equal(*parse("-a * ad"), *parse("(-a) * ad")));
  EXPECT_TRUE(equal(*parse("2 / 4 * a"), *parse("(2 / 4) * a")));
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse("a + c");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos().line, 1);
    EXPECT_EQ(e.pos().column, 5);
    EXPECT_NE(std::string(e.what()).find("unknown identifier 'c'"), std::string::npos);
  }
  try {
    parse("a +\n  * b");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos().line, 2);
    EXPECT_EQ(e.pos().column, 3);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse("a ^ -1"), ParseError);
  EXPECT_THROW(parse("a ^ 1.5"), ParseError);
  EXPECT_THROW(parse("comm(a)"), ParseError);
  EXPECT_THROW(parse("foo(a)"), ParseError);
  EXPECT_THROW(parse("(a + ad"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("a ad"), ParseError);
}

TEST(Parse, Identity) {
  auto [l, r] = parse_identity("comm(N, a) = -a");
  EXPECT_EQ(l->name, "comm");
  EXPECT_EQ(r->kind, Expr::Kind::neg);
  auto [l2, r2] = parse_identity("comm(N, a) + a");
  EXPECT_EQ(r2->kind, Expr::Kind::number);
  EXPECT_EQ(r2->number, 0.0);
}

TEST(Print, RoundTripOnRandomCorpus) {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    const ExprPtr e = random_expr(rng, 6);
    const std::string text = print(*e);
    ExprPtr back;
    ASSERT_NO_THROW(back = parse(text)) << text;
    EXPECT_TRUE(equal(*e, *back)) << text << "\n" << print(*back);
    EXPECT_EQ(print(*back), text);
  }
}

TEST(Evaluate, SpecExamples) {
  const FockRep b = build_rep(AlgebraSpec::b(2, 1), 16);
  const TensorOperator x = evaluate(*parse("acomm(a, ad) - (alpha*N + beta*I)"), EvalContext::of(b));
  EXPECT_LT(windowed(x.matrix, 16, 1, 1), 1e-10);

  const FockRep h = build_rep(AlgebraSpec::h(1, 0.5, AlgebraSpec::distinguished_rho(1, 0.5)), 16);
  EXPECT_LT(windowed(evaluate(*parse("comm(b, bd) - (delta*I + nu*K)"), EvalContext::of(h)).matrix, 16, 1, 1), 1e-10);
  EXPECT_LT(windowed(evaluate(*parse("comm(M, b) + b"), EvalContext::of(h)).matrix, 16, 1, 1), 1e-12);

  const FockRep bq = build_rep(AlgebraSpec::bq(2, 1, 1.3), 8);
  const Matrix qb = evaluate(*parse("qbracket(alpha*N + beta*I, q)"), EvalContext::of(bq)).matrix;
  EXPECT_TRUE(is_diagonal(qb));
  for (int n = 0; n < 8; ++n) EXPECT_NEAR(qb(n, n).real(), q_bracket(2.0 * n + 1, QValue(1.3)), 1e-12);
}

TEST(Evaluate, AdditionIsExactHomomorphism) {
  std::mt19937_64 rng(99);
  const FockRep rep = build_rep(AlgebraSpec::b(4, 1), 6);
  const EvalContext ctx = EvalContext::of(rep);
  const std::vector<std::string> pieces = {"a*ad", "comm(N, a)", "2.5*N^2 - I", "phase(N)", "acomm(a, g)", "ad^3*a"};
  for (const std::string& x : pieces)
    for (const std::string& y : pieces) {
      const Matrix sum = evaluate(*parse("(" + x + ") + (" + y + ")"), ctx).matrix;
      const Matrix parts = evaluate(*parse(x), ctx).matrix + evaluate(*parse(y), ctx).matrix;
      EXPECT_TRUE(sum == parts) << x << " + " << y;
    }
}

TEST(Evaluate, CoproductAndAntipode) {
  const FockRep rep = build_rep(AlgebraSpec::b(2, 1), 6);
  const HopfTables t = build_tables(rep);
  const EvalContext ctx = EvalContext::of(rep, &t);
  const TensorOperator d = evaluate(*parse("coproduct(N) - (tensor(N, I) + tensor(I, N) + (beta/alpha)*tensor(I, I))"), ctx);
  EXPECT_EQ(d.sites, 2);
  EXPECT_LT(d.matrix.norm(), 1e-13);
  // S is an anti-homomorphism: S(a ad) = S(ad) S(a)
  const Matrix s = evaluate(*parse("antipode(a*ad)"), ctx).matrix;
  EXPECT_LT((s - t.antipode(Generator::raise) * t.antipode(Generator::lower)).norm(), 1e-13);
  // Delta is a homomorphism on the defining relation
  const TensorOperator rel = evaluate(*parse("coproduct(acomm(a, ad) - (alpha*N + beta*I))"), ctx);
  EXPECT_LT(windowed_norm(rel.matrix, TensorWindow::per_slot(6, 2, 2)), 1e-10);
}

TEST(Evaluate, Errors) {
  const FockRep b = build_rep(AlgebraSpec::b(2, 1), 6);
  EXPECT_THROW(evaluate(*parse("b + a"), EvalContext::of(b)), EvalError);
  EXPECT_THROW(evaluate(*parse("delta*I"), EvalContext::of(b)), EvalError);
  EXPECT_THROW(evaluate(*parse("tensor(a, a) + a"), EvalContext::of(b)), EvalError);
  EXPECT_THROW(evaluate(*parse("phase(a)"), EvalContext::of(b)), EvalError);
  EXPECT_THROW(evaluate(*parse("coproduct(a)"), EvalContext::of(b)), EvalError);
  const FockRep h = build_rep(AlgebraSpec::h(1, 0.5, 0), 6);
  EXPECT_THROW(evaluate(*parse("N"), EvalContext::of(h)), EvalError);
  EXPECT_NO_THROW(evaluate(*parse("M + K"), EvalContext::of(h)));
}

TEST(CheckIdentity, ReportsWithCatalogId) {
  const FockRep rep = build_rep(AlgebraSpec::b(2, 1), 12);
  const CheckReport r = check_identity("comm(N, a) = -a", EvalContext::of(rep), 0, 1e-10);
  EXPECT_EQ(r.identity, "expr.identity");
  EXPECT_EQ(r.subject, "comm(N, a) = -a");
  EXPECT_EQ(r.status, Status::pass);
  const CheckReport bad = check_identity("comm(N, a) = a", EvalContext::of(rep), 0, 1e-10);
  EXPECT_EQ(bad.status, Status::fail);
}
