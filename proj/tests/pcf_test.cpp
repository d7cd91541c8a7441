#include <gtest/gtest.h>

#include "recx/pcf/machine.hpp"
#include "recx/pcf/syntax.hpp"
#include "recx/pcf/typecheck.hpp"
#include "recx/workbench/generate.hpp"

using namespace recx;
using namespace recx::pcf;

namespace {

Term parse(const std::string& text) { return parse_pcf(text).term; }

Type type_of(const std::string& text, Strategy s) {
  auto p = parse_pcf(text, s);
  return typecheck_pcf({}, p.term, s);
}

Converged run(const std::string& text, Strategy s, std::uint64_t fuel = kDefaultFuel) {
  auto r = eval_pcf(parse_pcf(text, s).term, s, fuel);
  EXPECT_TRUE(r.converged()) << text;
  return r.get();
}

}  // namespace

TEST(PcfTypecheck, IdentityIsNatToNat) {
  EXPECT_EQ(type_of("(lam (x nat) x)", Strategy::CBV), Type::arrow(Type::nat(), Type::nat()));
}

TEST(PcfTypecheck, FixUnderCbvIsAStrategyError) {
  Term omega = Term::fix("x", Type::nat(), Term::var("x"));
  EXPECT_THROW(typecheck_pcf({}, omega, Strategy::CBV), StrategyError);
  EXPECT_EQ(typecheck_pcf({}, omega, Strategy::CBN), Type::nat());
}

TEST(PcfTypecheck, ListsAndRecOnlyUnderCbv) {
  EXPECT_THROW(type_of("(lcase nil (num 0) (h t (num 1)))", Strategy::CBN), StrategyError);
  EXPECT_THROW(type_of("(rec (f x nat nat) x)", Strategy::CBN), StrategyError);
}

TEST(PcfTypecheck, ListCaseOnNil) {
  EXPECT_EQ(type_of("(lcase nil (num 0) (h t (num 1)))", Strategy::CBV), Type::nat());
}

TEST(PcfTypecheck, ErrorsCarryLocations) {
  try {
    type_of("(add (num 1)\n  (lam (x nat) x))", Strategy::CBV);
    FAIL() << "expected a type error";
  } catch (const TypeError& e) {
    EXPECT_EQ(e.loc().line, 2);
    EXPECT_EQ(e.loc().column, 3);
  }
}

TEST(PcfTypecheck, UnboundVariable) { EXPECT_THROW(type_of("y", Strategy::CBV), TypeError); }

TEST(PcfTypecheck, CostConstructsRejected) { EXPECT_THROW(type_of("(cplus cone czero)", Strategy::CBN), TypeError); }

TEST(PcfSubst, ReplacesFreeVariable) {
  EXPECT_TRUE(alpha_equal(subst(Term::var("x"), "x", Term::num(3)), Term::num(3)));
}

TEST(PcfSubst, BoundOccurrenceShielded) {
  Term id = Term::lam("x", Type::nat(), Term::var("x"));
  EXPECT_TRUE(alpha_equal(subst(id, "x", Term::num(3)), id));
}

TEST(PcfSubst, AvoidsCapture) {
  Term t = Term::lam("y", Type::nat(), Term::var("x"));
  Term r = subst(t, "x", Term::var("y"));
  ASSERT_TRUE(r.is(Tag::Lam));
  EXPECT_NE(r.name(), "y");
  ASSERT_TRUE(r.body().is(Tag::Var));
  EXPECT_EQ(r.body().name(), "y");
  EXPECT_TRUE(alpha_equal(r, Term::lam("z", Type::nat(), Term::var("y"))));
}

TEST(PcfSubst, SimultaneousSwap) {
  Term t = Term::pair(Term::var("a"), Term::var("b"));
  Term r = subst(t, {{"a", Term::var("b")}, {"b", Term::var("a")}});
  EXPECT_TRUE(alpha_equal(r, Term::pair(Term::var("b"), Term::var("a"))));
}

TEST(PcfAlpha, RenamedBindersAreEqual) {
  EXPECT_TRUE(alpha_equal(parse("(lam (x nat) x)"), parse("(lam (y nat) y)")));
  EXPECT_FALSE(alpha_equal(parse("(lam (x nat) (lam (y nat) x))"), parse("(lam (x nat) (lam (y nat) y))")));
}

TEST(PcfParse, Numeral) { EXPECT_TRUE(alpha_equal(parse("(num 5)"), Term::num(5))); }

TEST(PcfParse, Application) {
  Term expected = Term::app(Term::lam("x", Type::nat(), Term::var("x")), Term::num(0));
  EXPECT_TRUE(alpha_equal(parse("(app (lam (x nat) x) (num 0))"), expected));
}

TEST(PcfParse, RecursiveFunction) {
  Term t = parse("(rec (f x nat nat) (ifz x (num 1) (app f (sub x (num 1)))))");
  ASSERT_TRUE(t.is(Tag::Rec));
  EXPECT_EQ(t.name(), "f");
  EXPECT_EQ(t.name2(), "x");
}

TEST(PcfParse, StrategyInference) {
  EXPECT_EQ(parse_pcf("(fix (x nat) x)").strategy, Strategy::CBN);
  EXPECT_EQ(parse_pcf("(rec (f x nat nat) x)").strategy, Strategy::CBV);
  EXPECT_EQ(parse_pcf("(num 1)").strategy, Strategy::CBV);
  EXPECT_EQ(parse_pcf("(num 1)", Strategy::CBN).strategy, Strategy::CBN);
}

TEST(PcfParse, LetFillsInBinderType) {
  Term t = parse("(let (x (pair (num 1) (num 2))) (proj1 x))");
  ASSERT_TRUE(t.is(Tag::App));
  EXPECT_EQ(t.kid(0).annot(), Type::prod(Type::nat(), Type::nat()));
}

TEST(PcfParse, ErrorsCarryLineAndColumn) {
  try {
    parse("(num 1)\n   (bogus)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.loc().line, 2);
  }
  EXPECT_THROW(parse("(app (num 1))"), ParseError);
  EXPECT_THROW(parse("(num -1)"), ParseError);
  EXPECT_THROW(parse("(lam (x nat) x"), ParseError);
}

TEST(PcfParse, RoundTripsGeneratedPrograms) {
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    for (auto s : {Strategy::CBV, Strategy::CBN}) {
      workbench::GenConfig cfg;
      cfg.seed = seed;
      cfg.strategy = s;
      Term t = workbench::gen_program(cfg);
      for (std::size_t width : {0, 60}) {
        Term back = parse_pcf(print_term(t, width), s).term;
        ASSERT_TRUE(alpha_equal(back, t)) << print_term(t);
      }
    }
}

TEST(PcfMachine, NumeralCostsNothing) {
  auto r = run("(num 7)", Strategy::CBV);
  EXPECT_TRUE(alpha_equal(r.value, Term::num(7)));
  EXPECT_EQ(r.cost, 0u);
}

TEST(PcfMachine, ApplicationCostsOne) {
  auto r = run("(app (lam (x nat) x) (num 0))", Strategy::CBV);
  EXPECT_TRUE(alpha_equal(r.value, Term::num(0)));
  EXPECT_EQ(r.cost, 1u);
}

TEST(PcfMachine, ProjectionCostsOne) {
  auto r = run("(proj1 (pair (num 2) (num 3)))", Strategy::CBV);
  EXPECT_TRUE(alpha_equal(r.value, Term::num(2)));
  EXPECT_EQ(r.cost, 1u);
}

TEST(PcfMachine, OmegaRunsOutOfFuel) {
  Term omega = Term::fix("x", Type::nat(), Term::var("x"));
  for (std::uint64_t fuel : {1, 10, 1000}) EXPECT_TRUE(eval_pcf(omega, Strategy::CBN, fuel).out_of_fuel());
  EXPECT_FALSE(observed_cost(omega, Strategy::CBN, 1000).has_value());
}

TEST(PcfMachine, ArithmeticEdgeCases) {
  EXPECT_TRUE(alpha_equal(run("(sub (num 3) (num 5))", Strategy::CBV).value, Term::num(0)));
  EXPECT_TRUE(alpha_equal(run("(div (num 7) (num 0))", Strategy::CBV).value, Term::num(0)));
  EXPECT_TRUE(alpha_equal(run("(mod (num 7) (num 0))", Strategy::CBV).value, Term::num(0)));
  EXPECT_TRUE(alpha_equal(run("(div (num 7) (num 2))", Strategy::CBV).value, Term::num(3)));
  EXPECT_TRUE(alpha_equal(run("(mod (num 7) (num 3))", Strategy::CBV).value, Term::num(1)));
  // Arbitrary precision.
  auto big = run("(mul (num 4294967296) (num 4294967296))", Strategy::CBV).value;
  EXPECT_EQ(big.number(), Nat("18446744073709551616"));
}

TEST(PcfMachine, CallByNameIgnoresUnusedDivergence) {
  auto r = run("(app (lam (x nat) (num 3)) (fix (y nat) y))", Strategy::CBN);
  EXPECT_EQ(r.cost, 1u);
  auto p = run("(proj1 (pair (num 7) (fix (y nat) y)))", Strategy::CBN);
  EXPECT_EQ(p.cost, 1u);
}

TEST(PcfMachine, CallByNameRepeatsArgumentWork) {
  const std::string prog = "(app (lam (x nat) (add x x)) (app (lam (y nat) y) (num 2)))";
  EXPECT_EQ(run(prog, Strategy::CBN).cost, 3u);
  EXPECT_EQ(run(prog, Strategy::CBV).cost, 2u);
}

TEST(PcfMachine, FactorialCostsOnePerCall) {
  for (int n = 0; n <= 8; ++n) {
    std::string arg = "(num " + std::to_string(n) + ")";
    auto v = run("(app (rec (fact n nat nat) (ifz n (num 1) (mul n (app fact (sub n (num 1)))))) " + arg + ")",
                 Strategy::CBV);
    auto c = run("(app (fix (fact (-> nat nat)) (lam (n nat) (ifz n (num 1) (mul n (app fact (sub n (num 1))))))) " +
                     arg + ")",
                 Strategy::CBN);
    Nat expected = 1;
    for (int k = 2; k <= n; ++k) expected *= k;
    EXPECT_EQ(v.value.number(), expected);
    EXPECT_EQ(c.value.number(), expected);
    EXPECT_EQ(v.cost, static_cast<std::uint64_t>(n + 1));
  }
}

TEST(PcfMachine, ValuesAreCanonical) {
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    for (auto s : {Strategy::CBV, Strategy::CBN}) {
      workbench::GenConfig cfg{seed, 5, s};
      Term t = workbench::gen_program(cfg);
      auto r = eval_pcf(t, s);
      ASSERT_FALSE(r.stuck()) << print_term(t);
      if (r.converged()) EXPECT_TRUE(is_canonical(r.get().value, s)) << print_term(r.get().value);
    }
}

TEST(PcfMachine, TraceSeesEveryStep) {
  EvalOptions opts;
  std::size_t lines = 0;
  opts.trace = [&](std::string_view, const Term&, int) { ++lines; };
  auto r = eval_pcf(parse("(app (lam (x nat) (add x (num 1))) (num 2))"), Strategy::CBV, opts);
  ASSERT_TRUE(r.converged());
  EXPECT_EQ(lines, r.steps);
}

TEST(PcfMachine, FuelIsExactStepCount) {
  Term t = parse("(app (lam (x nat) (add x (num 1))) (num 2))");
  auto r = eval_pcf(t, Strategy::CBV);
  ASSERT_TRUE(r.converged());
  EXPECT_TRUE(eval_pcf(t, Strategy::CBV, r.steps).converged());
  EXPECT_TRUE(eval_pcf(t, Strategy::CBV, r.steps - 1).out_of_fuel());
}

TEST(PcfMachine, DeepRecursionDoesNotOverflow) {
  auto r = run("(app (rec (f n nat nat) (ifz n (num 0) (app f (sub n (num 1))))) (num 20000))", Strategy::CBV,
               1'000'000);
  EXPECT_EQ(r.cost, 20001u);
}
