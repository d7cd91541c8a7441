#include <gtest/gtest.h>

#include "recx/model/sized.hpp"
#include "recx/pcfc/pcfc.hpp"

using namespace recx;
using namespace recx::model;
using pcf::Term;
using pcf::Type;

namespace {
SizedValue fin(unsigned k) { return SizedValue::fin(k); }
std::string show(const std::string& text) { return to_string(denote(pcfc::parse_pcfc(text))); }
}  // namespace

TEST(Model, Omega) { EXPECT_TRUE(denote(Term::fix("x", Type::cost(), Term::var("x"))).is_bottom()); }

TEST(Model, IfzJoinsBranchesOnSuccessor) {
  EXPECT_EQ(show("(ifz (num 2) (num 1) (num 5))"), "5");
  EXPECT_EQ(show("(ifz (num 2) (num 5) (num 1))"), "5");
  EXPECT_EQ(show("(ifz (num 0) (num 5) (num 1))"), "5");
  EXPECT_EQ(show("(ifz (num 0) (num 1) (num 5))"), "1");
}

TEST(Model, Arithmetic) {
  EXPECT_EQ(show("(mod (num 7) (num 3))"), "2");
  EXPECT_EQ(show("(sub (num 5) (num 7))"), "0");
  EXPECT_EQ(show("(add (num 5) (num 7))"), "12");
  EXPECT_EQ(show("(mul (num 5) (num 7))"), "35");
  EXPECT_EQ(show("(div (num 9) (num 2))"), "4");
  EXPECT_EQ(show("(add (num 5) (fix (x nat) x))"), "inf");
}

TEST(Model, Costs) {
  EXPECT_EQ(show("(cplus cone (cnum 4))"), "5");
  EXPECT_EQ(show("(cplus cone (fix (x cost) x))"), "inf");
  EXPECT_EQ(show("(pair czero (num 3))"), "<0, 3>");
}

TEST(Model, Join) {
  EXPECT_EQ(to_string(join(fin(3), fin(5))), "5");
  EXPECT_TRUE(join(SizedValue::bottom(), fin(5)).is_bottom());
  EXPECT_EQ(to_string(join(SizedValue::pair(fin(1), fin(2)), SizedValue::pair(fin(2), fin(1)))), "<2, 2>");
  EXPECT_THROW(join(fin(1), SizedValue::pair(fin(1), fin(2))), ShapeMismatch);
}

TEST(Model, SizeOrder) {
  EXPECT_TRUE(size_leq(fin(3), SizedValue::bottom()));
  EXPECT_FALSE(size_leq(SizedValue::bottom(), fin(3)));
  EXPECT_TRUE(size_leq(fin(3), fin(3)));
  EXPECT_FALSE(size_leq(fin(4), fin(3)));
  EXPECT_TRUE(size_leq(SizedValue::pair(fin(1), fin(2)), SizedValue::pair(fin(1), fin(3))));
  EXPECT_FALSE(size_leq(SizedValue::pair(fin(1), fin(4)), SizedValue::pair(fin(1), fin(3))));
  auto f = denote(pcfc::parse_pcfc("(lam (y nat) y)"));
  EXPECT_THROW(size_leq(f, f), Undecidable);
}

TEST(Model, FunctionsApplyLazily) {
  Model m;
  auto f = m.denote(pcfc::parse_pcfc("(lam (y nat) (num 4))"));
  EXPECT_EQ(to_string(m.apply(f, SizedValue::bottom())), "4");
  EXPECT_EQ(to_string(f), "<fun>");
}

TEST(Model, FixedPoints) {
  EXPECT_EQ(show("(app (fix (t (-> nat cost)) (lam (k nat) (ifz k czero (cplus cone (app t (sub k (num 1))))))) "
                 "(num 30))"),
            "30");
  // Recursion on a growing argument never bottoms out.
  EXPECT_EQ(show("(app (fix (t (-> nat cost)) (lam (k nat) (ifz k czero (cplus cone (app t (add k (num 1))))))) "
                 "(num 3))"),
            "inf");
}

TEST(Model, StepBudgetGivesBottom) {
  ModelOptions opts;
  opts.step_budget = 100;
  Model m(opts);
  auto v = m.denote(pcfc::parse_pcfc(
      "(app (fix (t (-> nat cost)) (lam (k nat) (ifz k czero (cplus cone (app t (sub k (num 1))))))) (num 1000))"));
  EXPECT_TRUE(v.is_bottom());
  EXPECT_TRUE(m.exhausted());
}

TEST(Model, CostOf) {
  EXPECT_EQ(cost_of(denote(pcfc::parse_pcfc("(pair (cnum 3) (num 1))"))), Nat(3));
  EXPECT_EQ(cost_of(fin(2)), Nat(2));
  EXPECT_FALSE(cost_of(SizedValue::bottom()).has_value());
}
