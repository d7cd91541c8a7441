#include "recx/pcfc/pcfc.hpp"

#include "recx/pcf/syntax.hpp"
#include "recx/support/stack.hpp"

namespace recx::pcfc {

Type typecheck_pcfc(const pcf::TypingContext& ctx, const Term& t) {
  return pcf::elaborate(ctx, t, pcf::Strategy::CBN, pcf::Language::Pcfc).type;
}

Term parse_pcfc(std::string_view text) {
  Term raw = pcf::term_from_sexpr(read_sexpr(text));
  try {
    return pcf::elaborate({}, raw, pcf::Strategy::CBN, pcf::Language::Pcfc).term;
  } catch (const TypeError&) {
    return raw;
  }
}

Term numc(const Nat& n) {
  Term t = Term::czero();
  for (Nat i = 0; i < n; ++i) t = Term::cplus(Term::cone(), t);
  return t;
}

Term expand_cost_numerals(const Term& t) {
  if (t.is(Tag::CNum)) return numc(t.number());
  if (t.arity() == 0) return t;
  std::array<Term, 3> kids;
  for (int i = 0; i < t.arity(); ++i) kids[i] = expand_cost_numerals(t.kid(i));
  return t.rebuild(std::move(kids));
}

namespace {

struct FuelExhausted {};
struct StuckAt {
  std::string reason;
};

class Evaluator {
 public:
  explicit Evaluator(std::uint64_t fuel) : fuel_(fuel) {}
  std::uint64_t steps() const { return steps_; }

  Term eval(const Term& t) {
    if (steps_ >= fuel_) throw FuelExhausted{};
    ++steps_;
    switch (t.tag()) {
      case Tag::Num:
      case Tag::Lam:
      case Tag::Pair:
      case Tag::CNum: return t;
      case Tag::CZero: return Term::cnum(0);
      case Tag::COne: return Term::cnum(1);
      case Tag::CPlus: return Term::cnum(cost(eval(t.kid(0))) + cost(eval(t.kid(1))));
      case Tag::Arith: {
        Nat a = number(eval(t.kid(0)));
        Nat b = number(eval(t.kid(1)));
        return Term::num(apply_arith(t.op(), a, b));
      }
      case Tag::IfZ: return eval(t.kid(number(eval(t.kid(0))) == 0 ? 1 : 2));
      case Tag::Proj: {
        Term p = eval(t.kid(0));
        if (!p.is(Tag::Pair)) throw StuckAt{"projection from non-pair"};
        return eval(p.kid(t.index() - 1));
      }
      case Tag::App: {
        Term f = eval(t.kid(0));
        if (!f.is(Tag::Lam)) throw StuckAt{"application of non-function"};
        return eval(pcf::subst(f.body(), f.name(), t.kid(1)));
      }
      case Tag::Fix: return eval(pcf::subst(t.body(), t.name(), t));
      case Tag::Var: throw StuckAt{"free variable " + t.name()};
      default: throw StuckAt{"construct outside the recurrence language"};
    }
  }

 private:
  static const Nat& number(const Term& v) {
    if (!v.is(Tag::Num)) throw StuckAt{"expected a numeral"};
    return v.number();
  }
  static const Nat& cost(const Term& v) {
    if (!v.is(Tag::CNum)) throw StuckAt{"expected a cost"};
    return v.number();
  }

  std::uint64_t fuel_;
  std::uint64_t steps_ = 0;
};

}  // namespace

Outcome eval_pcfc(const Term& t, std::uint64_t fuel) {
  return with_large_stack([&] {
    Evaluator ev(fuel);
    Outcome out;
    try {
      out.result = ev.eval(t);
    } catch (const FuelExhausted&) {
      out.result = OutOfFuel{};
    } catch (const StuckAt& e) {
      out.result = Stuck{e.reason};
    }
    out.steps = ev.steps();
    return out;
  });
}

Term unfold_fix(const std::string& x, const Type& a, const Term& body, unsigned n) {
  Term approx = Term::fix(x, a, Term::var(x));
  for (unsigned i = 0; i < n; ++i) approx = pcf::subst(body, x, approx);
  return approx;
}

Term CostAlgebra::apply(const Term& cost, const Term& e) const {
  return pcf::subst(structure, {{kCost, cost}, {kValue, e}});
}

CostAlgebra algebra_for(const cbpv::CompType& b, const PotentialType& potential) {
  Term c = Term::var(CostAlgebra::kCost);
  Term x = Term::var(CostAlgebra::kValue);
  switch (b.kind()) {
    case cbpv::CKind::F:
      return {Type::prod(Type::cost(), potential(b.val())),
              Term::pair(Term::cplus(c, Term::proj(1, x)), Term::proj(2, x))};
    case cbpv::CKind::With: {
      CostAlgebra l = algebra_for(b.left(), potential);
      CostAlgebra r = algebra_for(b.right(), potential);
      return {Type::prod(l.carrier, r.carrier), Term::pair(l.apply(c, Term::proj(1, x)), r.apply(c, Term::proj(2, x)))};
    }
    case cbpv::CKind::Arrow: {
      Type dom = potential(b.val());
      CostAlgebra cod = algebra_for(b.cod(), potential);
      return {Type::arrow(dom, cod.carrier), Term::lam("y", dom, cod.apply(c, Term::app(x, Term::var("y"))))};
    }
  }
  return {};
}

}  // namespace recx::pcfc
