#include "recx/model/sized.hpp"

#include <algorithm>

#include "recx/support/errors.hpp"
#include "recx/support/stack.hpp"

namespace recx::model {

using pcf::Tag;
using pcf::Term;

SizedValue SizedValue::fin(Nat k) {
  return SizedValue(std::make_shared<const Node>(Node{Kind::Fin, std::move(k)}));
}

SizedValue SizedValue::bottom() {
  static const SizedValue b(std::make_shared<const Node>(Node{Kind::Bottom}));
  return b;
}

SizedValue SizedValue::pair(ThunkPtr a, ThunkPtr b) {
  Node n{Kind::Pair};
  n.left = std::move(a);
  n.right = std::move(b);
  return SizedValue(std::make_shared<const Node>(std::move(n)));
}

SizedValue SizedValue::pair(SizedValue a, SizedValue b) {
  return pair(Thunk::ready(std::move(a)), Thunk::ready(std::move(b)));
}

SizedValue SizedValue::closure(std::string param, Term body, Env env) {
  Node n{Kind::Closure};
  n.param = std::move(param);
  n.body = std::move(body);
  n.env = std::move(env);
  return SizedValue(std::make_shared<const Node>(std::move(n)));
}

SizedValue SizedValue::join_fun(SizedValue f, SizedValue g) {
  Node n{Kind::JoinFun};
  n.f = std::make_shared<const SizedValue>(std::move(f));
  n.g = std::make_shared<const SizedValue>(std::move(g));
  return SizedValue(std::make_shared<const Node>(std::move(n)));
}

ThunkPtr Thunk::ready(SizedValue v) {
  auto t = std::make_shared<Thunk>();
  t->value = std::move(v);
  return t;
}

ThunkPtr Thunk::delay(std::function<SizedValue()> f) {
  auto t = std::make_shared<Thunk>();
  t->compute = std::move(f);
  return t;
}

const SizedValue& Thunk::force() {
  if (value) return *value;
  if (forcing) {
    // Only reachable through a cyclic environment; treat it as divergence.
    static const SizedValue b = SizedValue::bottom();
    return b;
  }
  forcing = true;
  SizedValue v = compute();
  forcing = false;
  value = std::move(v);
  compute = nullptr;
  return *value;
}

SizedValue join(const SizedValue& v, const SizedValue& w) {
  if (v.is_bottom() || w.is_bottom()) return SizedValue::bottom();
  if (v.is_fin() && w.is_fin()) return SizedValue::fin(std::max(v.number(), w.number()));
  if (v.is_pair() && w.is_pair()) {
    auto part = [&](int i) {
      ThunkPtr a = v.component(i), b = w.component(i);
      return Thunk::delay([a, b] { return join(a->force(), b->force()); });
    };
    return SizedValue::pair(part(1), part(2));
  }
  if (v.is_function() && w.is_function()) return SizedValue::join_fun(v, w);
  throw ShapeMismatch("join of values of different types");
}

namespace {
bool leq(const SizedValue& v, const SizedValue& w) {
  if (v.is_function() || w.is_function()) throw Undecidable("size order at function type");
  if (w.is_bottom()) return true;
  if (v.is_bottom()) {
    if (w.is_fin()) return false;
    return leq(v, w.component(1)->force()) && leq(v, w.component(2)->force());
  }
  if (v.is_fin() && w.is_fin()) return v.number() <= w.number();
  if (v.is_pair() && w.is_pair())
    return leq(v.component(1)->force(), w.component(1)->force()) &&
           leq(v.component(2)->force(), w.component(2)->force());
  throw ShapeMismatch("size comparison of values of different types");
}

std::string print(const SizedValue& v) {
  switch (v.kind()) {
    case SizedValue::Kind::Fin: return v.number().str();
    case SizedValue::Kind::Bottom: return "inf";
    case SizedValue::Kind::Pair:
      return "<" + print(v.component(1)->force()) + ", " + print(v.component(2)->force()) + ">";
    case SizedValue::Kind::Closure:
    case SizedValue::Kind::JoinFun: return "<fun>";
  }
  return "?";
}
}  // namespace

bool size_leq(const SizedValue& v, const SizedValue& w) {
  return with_large_stack([&] { return leq(v, w); });
}

bool size_equal(const SizedValue& v, const SizedValue& w) { return size_leq(v, w) && size_leq(w, v); }

std::string to_string(const SizedValue& v) {
  return with_large_stack([&] { return print(v); });
}

std::optional<Nat> cost_of(const SizedValue& v) {
  if (v.is_fin()) return v.number();
  if (v.is_pair()) return cost_of(v.component(1)->force());
  return std::nullopt;
}

struct Model::State {
  ModelOptions opts;
  std::uint64_t steps = 0;
  bool exhausted = false;

  bool tick() {
    if (steps >= opts.step_budget) {
      exhausted = true;
      return false;
    }
    ++steps;
    return true;
  }
};

namespace {

using StatePtr = std::shared_ptr<Model::State>;

SizedValue eval(const StatePtr& st, const Term& t, const Env& env);

ThunkPtr suspend(const StatePtr& st, const Term& t, const Env& env) {
  switch (t.tag()) {
    case Tag::Var:
      if (const ThunkPtr* p = env.find(t.name())) return *p;
      throw Error("unbound variable " + t.name() + " in recurrence");
    case Tag::Num: return Thunk::ready(SizedValue::fin(t.number()));
    default: return Thunk::delay([st, t, env] { return eval(st, t, env); });
  }
}

SizedValue apply_value(const StatePtr& st, const SizedValue& f, const ThunkPtr& arg) {
  switch (f.kind()) {
    case SizedValue::Kind::Closure: return eval(st, f.body(), f.env().extend(f.param(), arg));
    case SizedValue::Kind::JoinFun:
      return join(apply_value(st, f.joined(1), arg), apply_value(st, f.joined(2), arg));
    case SizedValue::Kind::Bottom: return SizedValue::bottom();
    default: throw ShapeMismatch("application of a non-function");
  }
}

SizedValue project_value(const SizedValue& v, int i) {
  if (v.is_bottom()) return v;
  if (!v.is_pair()) throw ShapeMismatch("projection from a non-pair");
  return v.component(i)->force();
}

// The n-th approximant of fix x.body.
SizedValue approximant(const StatePtr& st, const Term& fix, const Env& env, unsigned n) {
  if (n == 0) return SizedValue::bottom();
  ThunkPtr inner = Thunk::delay([st, fix, env, n] { return approximant(st, fix, env, n - 1); });
  return eval(st, fix.body(), env.extend(fix.name(), inner));
}

SizedValue eval(const StatePtr& st, const Term& t, const Env& env) {
  if (!st->tick()) return SizedValue::bottom();
  switch (t.tag()) {
    case Tag::Var: return suspend(st, t, env)->force();
    case Tag::Num:
    case Tag::CNum: return SizedValue::fin(t.number());
    case Tag::CZero: return SizedValue::fin(0);
    case Tag::COne: return SizedValue::fin(1);
    case Tag::CPlus: {
      SizedValue a = eval(st, t.kid(0), env);
      if (a.is_bottom()) return a;
      SizedValue b = eval(st, t.kid(1), env);
      if (b.is_bottom()) return b;
      return SizedValue::fin(a.number() + b.number());
    }
    case Tag::Arith: {
      const Term& rhs = t.kid(1);
      SizedValue a = eval(st, t.kid(0), env);
      if (a.is_bottom()) return a;
      SizedValue b = eval(st, rhs, env);
      if (b.is_bottom()) return b;
      switch (t.op()) {
        case ArithOp::Add:
        case ArithOp::Mul: return SizedValue::fin(apply_arith(t.op(), a.number(), b.number()));
        case ArithOp::Sub:
        case ArithOp::Div:
          // Exact against a literal, otherwise bounded by the left operand.
          if (rhs.is(Tag::Num)) return SizedValue::fin(apply_arith(t.op(), a.number(), b.number()));
          return a;
        case ArithOp::Mod: return SizedValue::fin(apply_arith(ArithOp::Sub, b.number(), 1));
      }
      return SizedValue::bottom();
    }
    case Tag::IfZ: {
      SizedValue n = eval(st, t.kid(0), env);
      if (n.is_bottom()) return n;
      if (n.number() == 0) return eval(st, t.kid(1), env);
      return join(eval(st, t.kid(1), env), eval(st, t.kid(2), env));
    }
    case Tag::Pair: return SizedValue::pair(suspend(st, t.kid(0), env), suspend(st, t.kid(1), env));
    case Tag::Proj: return project_value(eval(st, t.kid(0), env), t.index());
    case Tag::Lam: return SizedValue::closure(t.name(), t.body(), env);
    case Tag::App: {
      SizedValue f = eval(st, t.kid(0), env);
      if (f.is_bottom()) return f;
      return apply_value(st, f, suspend(st, t.kid(1), env));
    }
    case Tag::Fix: return approximant(st, t, env, st->opts.fix_depth);
    default: throw Error("not a recurrence term");
  }
}

}  // namespace

Model::Model(ModelOptions opts) : state_(std::make_shared<State>()) { state_->opts = opts; }

SizedValue Model::denote(const Term& t, const Env& env) {
  return with_large_stack([&] { return eval(state_, t, env); });
}

SizedValue Model::apply(const SizedValue& f, const SizedValue& arg) {
  return with_large_stack([&] { return apply_value(state_, f, Thunk::ready(arg)); });
}

SizedValue Model::project(int i, const SizedValue& v) {
  return with_large_stack([&] { return project_value(v, i); });
}

bool Model::exhausted() const { return state_->exhausted; }
std::uint64_t Model::steps() const { return state_->steps; }

SizedValue denote(const Term& t, const Env& env, ModelOptions opts) { return Model(opts).denote(t, env); }

}  // namespace recx::model
