#include <gtest/gtest.h>

#include "recx/model/sized.hpp"
#include "recx/pcf/syntax.hpp"
#include "recx/pcfc/pcfc.hpp"
#include "recx/simplify.hpp"
#include "recx/support/sexpr.hpp"
#include "recx/workbench/generate.hpp"

using namespace recx;
using pcf::Term;
using pcf::Type;

namespace {

Term simp(const std::string& text, simplify::RuleSet rules = {}) {
  auto ctx = workbench::rule_instance_context();
  auto t = pcf::elaborate(ctx, pcf::term_from_sexpr(read_sexpr(text)), pcf::Strategy::CBN, pcf::Language::Pcfc).term;
  return simplify::simplify(t, rules);
}

Term read(const std::string& text) { return pcf::term_from_sexpr(read_sexpr(text)); }

}  // namespace

TEST(Simplify, ZeroUnit) { EXPECT_TRUE(pcf::alpha_equal(simp("(cplus czero c)"), Term::var("c"))); }

TEST(Simplify, ProjectionBeta) { EXPECT_TRUE(pcf::alpha_equal(simp("(proj1 (pair a b))"), Term::var("a"))); }

TEST(Simplify, IfzSameBranches) {
  EXPECT_TRUE(pcf::alpha_equal(simp("(ifz (num 4) (add a b) (add a b))"), read("(add a b)")));
}

TEST(Simplify, IfzZero) { EXPECT_TRUE(pcf::alpha_equal(simp("(ifz (num 0) a b)"), Term::var("a"))); }

TEST(Simplify, NonzeroIfzIsKept) {
  // The model joins both branches, so picking one would change the bound.
  EXPECT_TRUE(simp("(ifz (num 2) a b)").is(pcf::Tag::IfZ));
}

TEST(Simplify, CostConstantsFold) {
  EXPECT_TRUE(pcf::alpha_equal(simp("(cplus cone (cplus (cnum 2) czero))"), Term::cnum(3)));
  EXPECT_TRUE(pcf::alpha_equal(simp("(cplus (cplus cone c) (cnum 2))"), read("(cplus (cnum 3) c)")));
}

TEST(Simplify, Beta) {
  EXPECT_TRUE(pcf::alpha_equal(simp("(app (lam (x nat) (add x (num 1))) a)"), read("(add a (num 1))")));
  EXPECT_TRUE(pcf::alpha_equal(simp("(app (lam (x nat) (num 3)) a)"), Term::num(3)));
}

TEST(Simplify, ArithmeticFolds) {
  EXPECT_TRUE(pcf::alpha_equal(simp("(add (num 2) (mul (num 3) (num 4)))"), Term::num(14)));
  EXPECT_TRUE(pcf::alpha_equal(simp("(div (num 9) (num 2))"), Term::num(4)));
  EXPECT_TRUE(pcf::alpha_equal(simp("(add a (num 0))"), Term::var("a")));
  EXPECT_TRUE(pcf::alpha_equal(simp("(mul (num 1) a)"), Term::var("a")));
  // mod is never folded: the model reads it as the divisor minus one.
  EXPECT_TRUE(simp("(mod (num 7) (num 3))").is(pcf::Tag::Arith));
}

TEST(Simplify, OptionalGroups) {
  EXPECT_TRUE(simp("(sub (add a (num 1)) (num 1))").is(pcf::Tag::Arith));
  EXPECT_TRUE(pcf::alpha_equal(simp("(sub (add a (num 1)) (num 1))", simplify::RuleSet::parse("lists")),
                               Term::var("a")));
  EXPECT_TRUE(simp("(pair (proj1 (pair a b)) (proj2 (pair a b)))").is(pcf::Tag::Pair));
  auto eta = simplify::RuleSet::parse("core,eta");
  EXPECT_TRUE(eta.eta);
  EXPECT_FALSE(eta.lists);
  EXPECT_THROW(simplify::RuleSet::parse("everything"), Error);
}

TEST(Simplify, Idempotent) {
  for (const auto& rule : workbench::simplifier_rules())
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto inst = workbench::gen_rule_instance(rule, seed);
      auto once = simplify::simplify(inst.term, inst.rules);
      EXPECT_TRUE(pcf::alpha_equal(simplify::simplify(once, inst.rules), once)) << rule;
    }
}

TEST(Simplify, PreservesTypesAndDenotations) {
  auto ctx = workbench::rule_instance_context();
  for (const auto& rule : workbench::simplifier_rules())
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      auto inst = workbench::gen_rule_instance(rule, seed);
      auto out = simplify::simplify(inst.term, inst.rules);
      ASSERT_EQ(pcfc::typecheck_pcfc(ctx, out), inst.type) << rule;
      if (inst.type.is(pcf::TypeKind::Arrow)) continue;
      auto env = workbench::ground_instantiation(ctx, seed);
      EXPECT_TRUE(model::size_equal(model::denote(inst.term, env), model::denote(out, env)))
          << rule << ": " << pcf::print_term(inst.term);
    }
}
