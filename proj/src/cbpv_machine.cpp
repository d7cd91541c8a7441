#include "recx/cbpv/machine.hpp"

#include "recx/cbpv/syntax.hpp"
#include "recx/support/stack.hpp"

namespace recx::cbpv {

namespace {

struct FuelExhausted {};
struct StuckAt {
  std::string reason;
};

class Machine {
 public:
  explicit Machine(const EvalOptions& opts) : opts_(opts) {}

  std::uint64_t steps() const { return steps_; }

  Comp eval(const Comp& m, std::uint64_t& cost, int depth) {
    if (steps_ >= opts_.fuel) throw FuelExhausted{};
    ++steps_;
    switch (m.tag()) {
      case CTag::Return:
      case CTag::CPair:
      case CTag::Lam:
        trace("terminal", m, depth);
        return m;
      case CTag::Bind: {
        trace("bind", m, depth);
        Comp r = eval(m.comp(0), cost, depth + 1);
        if (!r.is(CTag::Return)) stuck("bind of non-return", m);
        return eval(subst(m.comp(1), m.name(), r.val(0)), cost, depth + 1);
      }
      case CTag::Force: {
        trace("force", m, depth);
        if (!m.val(0).is(VTag::Thunk)) stuck("force of non-thunk", m);
        return eval(m.val(0).comp(), cost, depth + 1);
      }
      case CTag::App: {
        trace("app", m, depth);
        Comp f = eval(m.comp(0), cost, depth + 1);
        if (!f.is(CTag::Lam)) stuck("application of non-lambda", m);
        return eval(subst(f.comp(0), f.name(), m.val(0)), cost, depth + 1);
      }
      case CTag::Proj: {
        trace("proj", m, depth);
        Comp p = eval(m.comp(0), cost, depth + 1);
        if (!p.is(CTag::CPair)) stuck("projection from non-pair", m);
        return eval(p.comp(m.index() - 1), cost, depth + 1);
      }
      case CTag::Split: {
        trace("split", m, depth);
        const Value& v = m.val(0);
        if (!v.is(VTag::Pair)) stuck("split of non-pair", m);
        return eval(subst(m.comp(0), {{m.name(), v.kid(0)}, {m.name2(), v.kid(1)}}), cost, depth + 1);
      }
      case CTag::IfZ: {
        const Value& v = m.val(0);
        if (!v.is(VTag::Num)) stuck("ifz on non-numeral", m);
        trace(v.number() == 0 ? "ifz-zero" : "ifz-succ", m, depth);
        return eval(m.comp(v.number() == 0 ? 0 : 1), cost, depth + 1);
      }
      case CTag::Calc: {
        trace("calc", m, depth);
        const Value &a = m.val(0), &b = m.val(1);
        if (!a.is(VTag::Num) || !b.is(VTag::Num)) stuck("calc on non-numerals", m);
        Value r = Value::num(apply_arith(m.op(), a.number(), b.number()));
        return eval(subst(m.comp(0), m.name(), r), cost, depth + 1);
      }
      case CTag::Charge: {
        trace("charge", m, depth);
        Comp t = eval(m.comp(0), cost, depth + 1);
        cost += 1;
        return t;
      }
      case CTag::Fix:
        trace("fix", m, depth);
        return eval(subst(m.comp(0), m.name(), Value::thunk(m)), cost, depth + 1);
      case CTag::LCase: {
        const Value& v = m.val(0);
        if (v.is(VTag::Nil)) {
          trace("lcase-nil", m, depth);
          return eval(m.comp(0), cost, depth + 1);
        }
        if (!v.is(VTag::Cons)) stuck("lcase on non-list", m);
        trace("lcase-cons", m, depth);
        return eval(subst(m.comp(1), {{m.name(), v.kid(0)}, {m.name2(), v.kid(1)}}), cost, depth + 1);
      }
    }
    stuck("unknown computation", m);
  }

 private:
  void trace(std::string_view rule, const Comp& m, int depth) {
    if (opts_.trace) opts_.trace(rule, m, depth);
  }

  [[noreturn]] void stuck(const std::string& why, const Comp& m) {
    throw StuckAt{why + " at " + print(m).substr(0, 80)};
  }

  const EvalOptions& opts_;
  std::uint64_t steps_ = 0;
};

}  // namespace

Outcome eval_cbpv(const Comp& m, const EvalOptions& opts) {
  return with_large_stack([&] {
    Machine machine(opts);
    Outcome out;
    try {
      std::uint64_t cost = 0;
      Comp t = machine.eval(m, cost, 0);
      out.result = Terminal{t, cost};
    } catch (const FuelExhausted&) {
      out.result = OutOfFuel{};
    } catch (const StuckAt& e) {
      out.result = Stuck{e.reason};
    }
    out.steps = machine.steps();
    return out;
  });
}

Outcome eval_cbpv(const Comp& m, std::uint64_t fuel) {
  EvalOptions opts;
  opts.fuel = fuel;
  return eval_cbpv(m, opts);
}

}  // namespace recx::cbpv
