#include <gtest/gtest.h>

#include "recx/cbpv/syntax.hpp"
#include "recx/embed.hpp"
#include "recx/extract.hpp"
#include "recx/model/sized.hpp"
#include "recx/pcf/syntax.hpp"
#include "recx/pcfc/pcfc.hpp"
#include "recx/simplify.hpp"
#include "recx/workbench/corpus.hpp"

using namespace recx;
using cbpv::CompType;
using cbpv::ValType;
using pcf::Term;
using pcf::Type;

namespace {

// Unrolled by hand: T(0) = 0, T(n) = 3 + T(n div 2).
unsigned exp_oracle(unsigned n) {
  unsigned t = 0;
  for (; n > 0; n /= 2) t += 3;
  return t;
}

// Cost of applying the potential of an extracted CBV function to n.
std::optional<Nat> applied_cost(const Term& extracted, unsigned n) {
  model::Model m;
  auto f = m.project(2, m.denote(extracted));
  return model::cost_of(m.apply(f, model::SizedValue::fin(n)));
}

}  // namespace

TEST(Extract, PotentialTypes) {
  EXPECT_EQ(extract::potential_type(ValType::nat()), Type::nat());
  EXPECT_EQ(extract::potential_type(ValType::list(ValType::nat())), Type::nat());
  EXPECT_EQ(extract::potential_type(ValType::thunk(CompType::arrow(ValType::nat(), CompType::free(ValType::nat())))),
            Type::arrow(Type::nat(), Type::prod(Type::cost(), Type::nat())));
}

TEST(Extract, ChargeOfReturn) {
  auto r = extract::complexity(cbpv::parse_comp("(charge (return (num 0)))"));
  EXPECT_EQ(r.type, Type::prod(Type::cost(), Type::nat()));
  EXPECT_EQ(model::to_string(model::denote(r.term)), "<1, 0>");
}

TEST(Extract, ThunkPotentialIsComplexity) {
  auto m = cbpv::parse_comp("(charge (return (num 4)))");
  auto p = extract::potential(cbpv::Value::thunk(m));
  auto c = extract::complexity(m);
  EXPECT_TRUE(pcf::alpha_equal(p.term, c.term));
  EXPECT_EQ(p.type, c.type);
}

TEST(Extract, ListPotentialIsLength) {
  auto v = cbpv::parse_value("(cons (num 9) (cons (num 9) nil))");
  auto p = extract::potential(v);
  EXPECT_EQ(p.type, Type::nat());
  EXPECT_TRUE(pcf::alpha_equal(simplify::simplify(p.term), Term::num(2)));
}

TEST(Extract, ResultTypechecksAtAlgebraCarrier) {
  for (const auto& prog : workbench::corpus()) {
    if (prog.recurrence) continue;
    auto r = extract::extract(prog.term(), prog.strategy);
    EXPECT_EQ(pcfc::typecheck_pcfc({}, r.term), r.type) << prog.name;
    auto b = embed::embed(prog.term(), prog.strategy).type;
    EXPECT_EQ(r.type, extract::complexity_algebra(b).carrier) << prog.name;
  }
}

TEST(Extract, NumeralCostsNothing) {
  auto r = extract::extract(Term::num(5), pcf::Strategy::CBV);
  EXPECT_EQ(model::to_string(model::denote(r.term)), "<0, 5>");
}

TEST(Extract, IdentityApplicationCostsOne) {
  auto t = pcf::parse_pcf("(app (lam (x nat) x) (num 0))").term;
  auto v = model::denote(extract::extract_cbv(t));
  EXPECT_EQ(model::cost_of(v), Nat(1));
}

TEST(Extract, ExpRecurrence) {
  auto ext = extract::extract_cbv(workbench::corpus_program("exp").term());
  for (unsigned n : {0u, 1u, 2u, 3u, 4u, 7u, 8u, 16u, 31u, 32u, 1000u}) {
    auto c = applied_cost(ext, n);
    ASSERT_TRUE(c.has_value()) << n;
    EXPECT_EQ(*c, Nat(exp_oracle(n))) << n;
  }
}

TEST(Extract, SimplificationPreservesExpRecurrence) {
  auto ext = extract::extract_cbv(workbench::corpus_program("exp").term());
  auto simp = simplify::simplify(ext);
  EXPECT_LT(simp.size(), ext.size());
  EXPECT_EQ(pcfc::typecheck_pcfc({}, simp), pcfc::typecheck_pcfc({}, ext));
  for (unsigned n = 0; n < 40; ++n) EXPECT_EQ(applied_cost(simp, n), applied_cost(ext, n)) << n;
}

TEST(Extract, CallByNameDuplicationIsCharged) {
  auto cbn = extract::extract_cbn(workbench::corpus_program("duplicate-cbn").term());
  auto cbv = extract::extract_cbv(workbench::corpus_program("duplicate-cbv").term());
  EXPECT_EQ(model::cost_of(model::denote(cbn)), Nat(3));
  EXPECT_EQ(model::cost_of(model::denote(cbv)), Nat(2));
}

TEST(Extract, DivergenceGivesInfiniteBound) {
  auto ext = extract::extract_cbn(workbench::corpus_program("omega").term());
  EXPECT_TRUE(model::denote(ext).is_bottom() || !model::cost_of(model::denote(ext)).has_value());
}

TEST(Extract, OpenTermsUsePotentialContext) {
  cbpv::Context ctx = cbpv::Context{}.extend("y", ValType::nat());
  auto r = extract::complexity(cbpv::parse_comp("(charge (return y))"), ctx);
  EXPECT_EQ(pcfc::typecheck_pcfc(extract::potential_context(ctx), r.term), r.type);
  model::Env env = model::Env{}.extend("y", model::Thunk::ready(model::SizedValue::fin(6)));
  EXPECT_EQ(model::to_string(model::denote(r.term, env)), "<1, 6>");
}
