#include <gtest/gtest.h>

#include "recx/cbpv/machine.hpp"
#include "recx/cbpv/syntax.hpp"
#include "recx/cbpv/typecheck.hpp"

using namespace recx;
using namespace recx::cbpv;

namespace {
Terminal run(const Comp& m) {
  auto r = eval_cbpv(m);
  EXPECT_TRUE(r.converged());
  return r.get();
}
}  // namespace

TEST(CbpvTypecheck, Examples) {
  EXPECT_EQ(typecheck_comp({}, Comp::ret(Value::num(3))), CompType::free(ValType::nat()));
  EXPECT_EQ(typecheck_comp({}, Comp::charge(Comp::ret(Value::num(0)))), CompType::free(ValType::nat()));
  Value id = Value::thunk(Comp::lam("x", ValType::nat(), Comp::ret(Value::var("x"))));
  EXPECT_EQ(typecheck_val({}, id),
            ValType::thunk(CompType::arrow(ValType::nat(), CompType::free(ValType::nat()))));
}

TEST(CbpvTypecheck, Rejections) {
  EXPECT_THROW(typecheck_comp({}, Comp::force(Value::num(1))), TypeError);
  EXPECT_THROW(typecheck_comp({}, Comp::ret(Value::var("x"))), TypeError);
  EXPECT_THROW(typecheck_comp({}, Comp::app(Comp::ret(Value::num(1)), Value::num(2))), TypeError);
  EXPECT_THROW(typecheck_comp({}, Comp::ifz(Value::num(0), Comp::ret(Value::num(1)),
                                            Comp::ret(Value::pair(Value::num(1), Value::num(2))))),
               TypeError);
}

TEST(CbpvSyntax, RoundTrip) {
  const char* src =
      "(bind (x (charge (return (num 1)))) (app (force (thunk (lam (y nat) (calc (v (add y x)) (return v))))) x))";
  Comp m = parse_comp(src);
  EXPECT_TRUE(alpha_equal(parse_comp(print(m)), m));
  EXPECT_TRUE(alpha_equal(parse_comp(print(m, 30)), m));
}

TEST(CbpvSyntax, PolarityErrors) {
  EXPECT_THROW(parse_comp("(num 3)"), PolarityError);
  EXPECT_THROW(parse_comp("(return (return (num 3)))"), PolarityError);
  EXPECT_THROW(parse_comp("(return"), ParseError);
}

TEST(CbpvMachine, ReturnIsTerminal) {
  auto t = run(Comp::ret(Value::num(3)));
  EXPECT_TRUE(alpha_equal(t.term, Comp::ret(Value::num(3))));
  EXPECT_EQ(t.cost, 0u);
}

TEST(CbpvMachine, ChargeCostsOne) {
  auto t = run(Comp::charge(Comp::ret(Value::num(0))));
  EXPECT_TRUE(alpha_equal(t.term, Comp::ret(Value::num(0))));
  EXPECT_EQ(t.cost, 1u);
}

TEST(CbpvMachine, BindAddsCosts) {
  Comp m = Comp::bind("x", Comp::charge(Comp::ret(Value::num(1))), Comp::charge(Comp::ret(Value::var("x"))));
  auto t = run(m);
  EXPECT_TRUE(alpha_equal(t.term, Comp::ret(Value::num(1))));
  EXPECT_EQ(t.cost, 2u);
}

TEST(CbpvMachine, FixUnfolds) {
  // Count down from 5, charging once per call.
  Comp m = parse_comp(
      "(app (cfix (f (-> nat (F nat))) (lam (n nat) (ifz n (return (num 0)) "
      "(calc (m (sub n (num 1))) (charge (app (force f) m)))))) (num 5))");
  auto t = run(m);
  EXPECT_EQ(t.cost, 5u);
}

TEST(CbpvMachine, OmegaRunsOutOfFuel) {
  Comp omega = parse_comp("(cfix (x (F nat)) (force x))");
  EXPECT_TRUE(eval_cbpv(omega, 1000).out_of_fuel());
}

TEST(CbpvMachine, Lists) {
  Comp m = parse_comp("(lcase (cons (num 4) nil) (return (num 0)) (h t (return h)))");
  auto t = run(m);
  EXPECT_TRUE(alpha_equal(t.term, Comp::ret(Value::num(4))));
}

TEST(CbpvMachine, SplitAndProjections) {
  auto t = run(parse_comp("(split (pair (num 1) (num 2)) (a b) (calc (v (sub b a)) (return v)))"));
  EXPECT_TRUE(alpha_equal(t.term, Comp::ret(Value::num(1))));
  auto p = run(parse_comp("(cproj2 (cpair (return (num 1)) (charge (return (num 2)))))"));
  EXPECT_TRUE(alpha_equal(p.term, Comp::ret(Value::num(2))));
  EXPECT_EQ(p.cost, 1u);
}

TEST(CbpvTerm, ScaleCharges) {
  Comp m = Comp::charge(Comp::bind("x", Comp::charge(Comp::ret(Value::num(1))), Comp::ret(Value::var("x"))));
  EXPECT_EQ(run(scale_charges(m, 0)).cost, 0u);
  EXPECT_EQ(run(scale_charges(m, 2)).cost, 4u);
}

TEST(CbpvTerm, SubstitutionAvoidsCapture) {
  Comp m = Comp::lam("y", ValType::nat(), Comp::ret(Value::var("x")));
  Comp r = subst(m, "x", Value::var("y"));
  EXPECT_TRUE(alpha_equal(r, Comp::lam("z", ValType::nat(), Comp::ret(Value::var("y")))));
}
