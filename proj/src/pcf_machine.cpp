#include "recx/pcf/machine.hpp"

#include "recx/pcf/syntax.hpp"
#include "recx/support/stack.hpp"

namespace recx::pcf {

namespace {

struct FuelExhausted {};
struct StuckAt {
  std::string reason;
};

class Machine {
 public:
  Machine(Strategy s, const EvalOptions& opts) : s_(s), opts_(opts) {}

  std::uint64_t steps() const { return steps_; }

  Term eval(const Term& t, std::uint64_t& cost, int depth) {
    if (steps_ >= opts_.fuel) throw FuelExhausted{};
    ++steps_;
    return s_ == Strategy::CBV ? cbv(t, cost, depth) : cbn(t, cost, depth);
  }

 private:
  void trace(std::string_view rule, const Term& t, int depth) {
    if (opts_.trace) opts_.trace(rule, t, depth);
  }

  [[noreturn]] void stuck(const std::string& why, const Term& t) {
    throw StuckAt{why + " at " + print_term(t).substr(0, 80)};
  }

  Nat number(const Term& v, const Term& at) {
    if (!v.is(Tag::Num)) stuck("expected a numeral", at);
    return v.number();
  }

  Term arith(const Term& t, std::uint64_t& cost, int depth) {
    trace("arith", t, depth);
    Nat a = number(eval(t.kid(0), cost, depth + 1), t);
    Nat b = number(eval(t.kid(1), cost, depth + 1), t);
    return Term::num(apply_arith(t.op(), a, b));
  }

  Term ifz(const Term& t, std::uint64_t& cost, int depth) {
    Nat n = number(eval(t.kid(0), cost, depth + 1), t);
    trace(n == 0 ? "ifz-zero" : "ifz-succ", t, depth);
    return eval(t.kid(n == 0 ? 1 : 2), cost, depth + 1);
  }

  Term cbv(const Term& t, std::uint64_t& cost, int depth) {
    switch (t.tag()) {
      case Tag::Num:
      case Tag::Lam:
      case Tag::Rec:
      case Tag::Nil:
        trace("value", t, depth);
        return t;
      case Tag::Arith: return arith(t, cost, depth);
      case Tag::IfZ: return ifz(t, cost, depth);
      case Tag::Pair:
      case Tag::Cons: {
        trace(t.is(Tag::Pair) ? "pair" : "cons", t, depth);
        Term a = eval(t.kid(0), cost, depth + 1);
        Term b = eval(t.kid(1), cost, depth + 1);
        return t.rebuild({a, b, {}});
      }
      case Tag::Proj: {
        trace("proj", t, depth);
        Term p = eval(t.kid(0), cost, depth + 1);
        if (!p.is(Tag::Pair)) stuck("projection from non-pair", t);
        cost += 1;
        return p.kid(t.index() - 1);
      }
      case Tag::App: {
        trace("app", t, depth);
        Term f = eval(t.kid(0), cost, depth + 1);
        Term v = eval(t.kid(1), cost, depth + 1);
        Term body;
        if (f.is(Tag::Lam))
          body = subst(f.body(), f.name(), v);
        else if (f.is(Tag::Rec))
          body = subst(f.body(), {{f.name(), f}, {f.name2(), v}});
        else
          stuck("application of non-function", t);
        cost += 1;
        return eval(body, cost, depth + 1);
      }
      case Tag::LCase: {
        Term l = eval(t.kid(0), cost, depth + 1);
        if (l.is(Tag::Nil)) {
          trace("lcase-nil", t, depth);
          return eval(t.kid(1), cost, depth + 1);
        }
        if (!l.is(Tag::Cons)) stuck("lcase on non-list", t);
        trace("lcase-cons", t, depth);
        return eval(subst(t.kid(2), {{t.name(), l.kid(0)}, {t.name2(), l.kid(1)}}), cost, depth + 1);
      }
      case Tag::Var: stuck("free variable " + t.name(), t);
      default: stuck("construct not available under CBV", t);
    }
  }

  Term cbn(const Term& t, std::uint64_t& cost, int depth) {
    switch (t.tag()) {
      case Tag::Num:
      case Tag::Lam:
      case Tag::Pair:
        trace("value", t, depth);
        return t;
      case Tag::Arith: return arith(t, cost, depth);
      case Tag::IfZ: return ifz(t, cost, depth);
      case Tag::Proj: {
        trace("proj", t, depth);
        Term p = eval(t.kid(0), cost, depth + 1);
        if (!p.is(Tag::Pair)) stuck("projection from non-pair", t);
        cost += 1;
        return eval(p.kid(t.index() - 1), cost, depth + 1);
      }
      case Tag::App: {
        trace("app", t, depth);
        Term f = eval(t.kid(0), cost, depth + 1);
        if (!f.is(Tag::Lam)) stuck("application of non-function", t);
        cost += 1;
        return eval(subst(f.body(), f.name(), t.kid(1)), cost, depth + 1);
      }
      case Tag::Fix:
        trace("fix", t, depth);
        return eval(subst(t.body(), t.name(), t), cost, depth + 1);
      case Tag::Var: stuck("free variable " + t.name(), t);
      default: stuck("construct not available under CBN", t);
    }
  }

  Strategy s_;
  const EvalOptions& opts_;
  std::uint64_t steps_ = 0;
};

}  // namespace

EvalOutcome eval_pcf(const Term& t, Strategy s, const EvalOptions& opts) {
  return with_large_stack([&] {
    Machine m(s, opts);
    EvalOutcome out;
    try {
      std::uint64_t cost = 0;
      Term v = m.eval(t, cost, 0);
      out.result = Converged{v, cost};
    } catch (const FuelExhausted&) {
      out.result = OutOfFuel{};
    } catch (const StuckAt& e) {
      out.result = Stuck{e.reason};
    }
    out.steps = m.steps();
    return out;
  });
}

EvalOutcome eval_pcf(const Term& t, Strategy s, std::uint64_t fuel) {
  EvalOptions opts;
  opts.fuel = fuel;
  return eval_pcf(t, s, opts);
}

ExtNat observed_cost(const Term& t, Strategy s, std::uint64_t fuel) {
  auto out = eval_pcf(t, s, fuel);
  if (!out.converged()) return std::nullopt;
  return Nat(out.get().cost);
}

bool is_canonical(const Term& v, Strategy s) {
  switch (v.tag()) {
    case Tag::Num:
    case Tag::Lam: return true;
    case Tag::Pair: return s == Strategy::CBN || (is_canonical(v.kid(0), s) && is_canonical(v.kid(1), s));
    case Tag::Rec:
    case Tag::Nil: return s == Strategy::CBV;
    case Tag::Cons: return s == Strategy::CBV && is_canonical(v.kid(0), s) && is_canonical(v.kid(1), s);
    default: return false;
  }
}

}  // namespace recx::pcf
