#include <gtest/gtest.h>

#include "recx/embed.hpp"
#include "recx/model/sized.hpp"
#include "recx/pcfc/pcfc.hpp"
#include "recx/extract.hpp"

using namespace recx;
using namespace recx::pcfc;

namespace {
Term one() { return Term::cone(); }
Term zero() { return Term::czero(); }
Term omega(const Type& a) { return Term::fix("x", a, Term::var("x")); }
}  // namespace

TEST(PcfcTypecheck, Examples) {
  EXPECT_EQ(typecheck_pcfc({}, Term::cplus(one(), zero())), Type::cost());
  EXPECT_EQ(typecheck_pcfc({}, omega(Type::cost())), Type::cost());
  EXPECT_THROW(typecheck_pcfc({}, Term::cplus(one(), Term::num(1))), TypeError);
  EXPECT_EQ(typecheck_pcfc({}, Term::cnum(4)), Type::cost());
}

TEST(PcfcTypecheck, NoListsOrRec) {
  EXPECT_THROW(typecheck_pcfc({}, Term::nil()), Error);
  EXPECT_THROW(typecheck_pcfc({}, parse_pcfc("(rec (f x nat nat) x)")), Error);
}

TEST(Pcfc, Numc) {
  EXPECT_TRUE(pcf::alpha_equal(numc(0), zero()));
  EXPECT_TRUE(pcf::alpha_equal(numc(2), Term::cplus(one(), Term::cplus(one(), zero()))));
  EXPECT_TRUE(pcf::alpha_equal(expand_cost_numerals(Term::cnum(2)), numc(2)));
}

TEST(PcfcEval, Examples) {
  auto r = eval_pcfc(Term::cplus(one(), one()));
  ASSERT_TRUE(r.converged());
  EXPECT_TRUE(pcf::alpha_equal(r.value(), Term::cnum(2)));
  auto n = eval_pcfc(Term::num(8));
  ASSERT_TRUE(n.converged());
  EXPECT_TRUE(pcf::alpha_equal(n.value(), Term::num(8)));
  EXPECT_FALSE(eval_pcfc(omega(Type::cost()), 1000).converged());
}

TEST(PcfcEval, ParsedRecurrence) {
  auto t = parse_pcfc(
      "(app (fix (t (-> nat cost)) (lam (k nat) (ifz k czero (cplus (cnum 3) (app t (div k (num 2)))))))"
      " (num 16))");
  auto r = eval_pcfc(t);
  ASSERT_TRUE(r.converged());
  EXPECT_TRUE(pcf::alpha_equal(r.value(), Term::cnum(15)));
}

TEST(PcfcUnfold, Examples) {
  EXPECT_TRUE(pcf::alpha_equal(unfold_fix("x", Type::cost(), one(), 0), omega(Type::cost())));
  EXPECT_TRUE(pcf::alpha_equal(unfold_fix("x", Type::nat(), Term::num(3), 1), Term::num(3)));
  Term body = Term::cplus(one(), Term::var("x"));
  EXPECT_TRUE(pcf::alpha_equal(unfold_fix("x", Type::cost(), body, 2),
                               Term::cplus(one(), Term::cplus(one(), omega(Type::cost())))));
}

TEST(PcfcAlgebra, FreeAlgebra) {
  auto alg = algebra_for(cbpv::CompType::free(cbpv::ValType::nat()), extract::potential_type);
  EXPECT_EQ(alg.carrier, Type::prod(Type::cost(), Type::nat()));
  Term pv = Term::var(CostAlgebra::kValue);
  Term expected = Term::pair(Term::cplus(Term::var(CostAlgebra::kCost), Term::proj(1, pv)), Term::proj(2, pv));
  EXPECT_TRUE(pcf::alpha_equal(alg.structure, expected));
}

TEST(PcfcAlgebra, WithIsComponentwise) {
  auto f = cbpv::CompType::free(cbpv::ValType::nat());
  auto alg = algebra_for(cbpv::CompType::with(f, f), extract::potential_type);
  EXPECT_EQ(alg.carrier,
            Type::prod(Type::prod(Type::cost(), Type::nat()), Type::prod(Type::cost(), Type::nat())));
  // Charging one to <<0,1>,<2,3>> charges both components.
  Term e = Term::pair(Term::pair(Term::cnum(0), Term::num(1)), Term::pair(Term::cnum(2), Term::num(3)));
  auto v = model::denote(alg.apply(one(), e));
  EXPECT_EQ(model::to_string(v), "<<1, 1>, <3, 3>>");
}

TEST(PcfcAlgebra, ArrowIsPointwise) {
  auto b = cbpv::CompType::arrow(cbpv::ValType::nat(), cbpv::CompType::free(cbpv::ValType::nat()));
  auto alg = algebra_for(b, extract::potential_type);
  EXPECT_EQ(alg.carrier, Type::arrow(Type::nat(), Type::prod(Type::cost(), Type::nat())));
  Term f = pcf::Term::lam("y", Type::nat(), Term::pair(Term::cnum(4), Term::var("y")));
  model::Model m;
  auto g = m.denote(alg.apply(Term::cnum(2), f));
  EXPECT_EQ(model::to_string(m.apply(g, model::SizedValue::fin(7))), "<6, 7>");
}

TEST(PcfcAlgebra, ActionLaw) {
  // alpha(c1, alpha(c2, e)) = alpha(c1 + c2, e) at F nat.
  auto alg = algebra_for(cbpv::CompType::free(cbpv::ValType::nat()), extract::potential_type);
  for (int k = 0; k < 5; ++k)
    for (int p = 0; p < 5; ++p) {
      Term e = Term::pair(Term::cnum(k), Term::num(p));
      auto lhs = model::denote(alg.apply(one(), alg.apply(one(), e)));
      auto rhs = model::denote(alg.apply(Term::cplus(one(), one()), e));
      EXPECT_TRUE(model::size_equal(lhs, rhs));
      EXPECT_EQ(model::to_string(lhs), "<" + std::to_string(k + 2) + ", " + std::to_string(p) + ">");
    }
}
