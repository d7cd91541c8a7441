#include "recx/workbench/generate.hpp"

#include <random>

#include "recx/pcfc/pcfc.hpp"

namespace recx::workbench {

using pcf::Strategy;
using pcf::Tag;
using pcf::Term;
using pcf::Type;
using pcf::TypeKind;

namespace {

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(rng_) < p; }

  // Index drawn with the given weights; all-zero weights pick the last.
  int pick(std::initializer_list<double> weights) {
    double total = 0;
    for (double w : weights) total += w;
    double r = std::uniform_real_distribution<double>(0, total)(rng_);
    int i = 0;
    for (double w : weights) {
      if (r < w) return i;
      r -= w;
      ++i;
    }
    return i - 1;
  }

 private:
  std::mt19937_64 rng_;
};

Type nat() { return Type::nat(); }
Type nat_list() { return Type::list(Type::nat()); }

ArithOp random_op(Random& r) {
  switch (r.pick({3, 3, 1, 2, 1})) {
    case 0: return ArithOp::Add;
    case 1: return ArithOp::Sub;
    case 2: return ArithOp::Mul;
    case 3: return ArithOp::Div;
    default: return ArithOp::Mod;
  }
}

// A recursive function in scope, callable on decreasing arguments of x.
struct SelfCall {
  std::string f;
  std::string x;
  Type cod;
  int calls_left;
};

struct Var {
  std::string name;
  Type type;
};

// Shared skeleton of the two generators: a typed scope and fresh names.
class Scoped {
 protected:
  explicit Scoped(std::uint64_t seed) : r_(seed) {}

  std::string fresh(const char* base) { return base + std::to_string(counter_++); }

  std::vector<const Var*> vars_of(const Type& a) const {
    std::vector<const Var*> out;
    for (const auto& v : vars_)
      if (v.type == a) out.push_back(&v);
    return out;
  }

  template <class F>
  Term with_var(const std::string& x, const Type& a, F&& body) {
    vars_.push_back({x, a});
    Term t = body();
    vars_.pop_back();
    return t;
  }

  // A call to an enclosing recursive function on a smaller argument.
  std::optional<Term> self_call(const Type& a) {
    for (auto it = calls_.rbegin(); it != calls_.rend(); ++it) {
      if (it->calls_left == 0 || !(it->cod == a)) continue;
      --it->calls_left;
      Term arg = r_.chance(0.7) ? Term::arith(ArithOp::Sub, Term::var(it->x), Term::num(1 + r_.below(2)))
                                : Term::arith(ArithOp::Div, Term::var(it->x), Term::num(2 + r_.below(2)));
      return Term::app(Term::var(it->f), arg);
    }
    return std::nullopt;
  }

  bool can_self_call(const Type& a) const {
    for (const auto& c : calls_)
      if (c.calls_left > 0 && c.cod == a) return true;
    return false;
  }

  Random r_;
  int counter_ = 0;
  std::vector<Var> vars_;
  std::vector<SelfCall> calls_;
};

class ProgramGen : Scoped {
 public:
  explicit ProgramGen(const GenConfig& cfg) : Scoped(cfg.seed), cfg_(cfg) {}

  Term program() {
    Type a = nat();
    if (r_.chance(cfg_.type_bias)) {
      bool cbv = cfg_.strategy == Strategy::CBV;
      switch (r_.pick({2, 3, cbv ? 1.5 : 0, 1})) {
        case 0: a = Type::prod(nat(), nat()); break;
        case 1: a = Type::arrow(nat(), nat()); break;
        case 2: a = nat_list(); break;
        default: a = Type::prod(Type::arrow(nat(), nat()), nat()); break;
      }
    }
    return gen(a, static_cast<int>(cfg_.max_depth));
  }

 private:
  bool cbv() const { return cfg_.strategy == Strategy::CBV; }

  // Mostly small, sometimes large enough to make recursion iterate.
  Term numeral() { return Term::num(r_.chance(0.15) ? 5 + r_.below(40) : r_.below(5)); }

  Type small_type() {
    switch (r_.pick({6, 1.5, 1.5, cbv() ? 1.0 : 0.0})) {
      case 0: return nat();
      case 1: return Type::prod(nat(), nat());
      case 2: return Type::arrow(nat(), nat());
      default: return nat_list();
    }
  }

  Term leaf(const Type& a) {
    auto vs = vars_of(a);
    if (!vs.empty() && r_.chance(0.6)) return Term::var(vs[r_.below(static_cast<int>(vs.size()))]->name);
    if (!cbv() && r_.chance(0.02)) {
      std::string y = fresh("w");
      return Term::fix(y, a, Term::var(y));
    }
    switch (a.kind()) {
      case TypeKind::Nat: return numeral();
      case TypeKind::Prod: return Term::pair(leaf(a.left()), leaf(a.right()));
      case TypeKind::List: return r_.chance(0.5) ? Term::nil() : Term::cons(leaf(nat()), Term::nil());
      case TypeKind::Arrow: {
        std::string x = fresh("x");
        return Term::lam(x, a.dom(), with_var(x, a.dom(), [&] { return leaf(a.cod()); }));
      }
      default: throw UnsupportedType("cannot generate " + pcf::to_string(a));
    }
  }

  Term gen(const Type& a, int depth) {
    if (depth <= 1) return leaf(a);
    int d = depth - 1;
    bool is_nat = a.is(TypeKind::Nat);
    bool is_prod = a.is(TypeKind::Prod);
    bool is_list = a.is(TypeKind::List);
    bool is_arrow = a.is(TypeKind::Arrow) && a.dom().is(TypeKind::Nat);
    bool var_ok = !vars_of(a).empty();
    bool self = can_self_call(a);
    switch (r_.pick({var_ok ? 3.0 : 0, is_nat ? 2.0 : 0, is_nat ? 4.0 : 0, 1.5, 1.5, 1.5, self ? 5.0 : 0,
                     is_nat ? 0.7 : 0, cbv() ? 0.5 : 0, is_prod ? 3.0 : 0, is_list ? 3.0 : 0, is_arrow ? 3.0 : 0,
                     is_arrow ? 6.0 * cfg_.recursion_rate : 0})) {
      case 0: return leaf(a);
      case 1: return numeral();
      case 2: return Term::arith(random_op(r_), gen(nat(), d), gen(nat(), d));
      case 3: return Term::ifz(gen(nat(), d), gen(a, d), gen(a, d));
      case 4: {
        Type b = small_type();
        Term bound = gen(b, d);
        std::string x = fresh("v");
        return Term::app(Term::lam(x, b, with_var(x, b, [&] { return gen(a, d); })), bound);
      }
      case 5: {
        Term f = gen(Type::arrow(nat(), a), d);
        return Term::app(f, gen(nat(), d));
      }
      case 6: return *self_call(a);
      case 7: return Term::proj(1 + r_.below(2), gen(Type::prod(nat(), nat()), d));
      case 8: {
        Term l = gen(nat_list(), d);
        Term none = gen(a, d);
        std::string h = fresh("h"), t = fresh("t");
        Term some = with_var(h, nat(), [&] { return with_var(t, nat_list(), [&] { return gen(a, d); }); });
        return Term::lcase(l, none, h, t, some);
      }
      case 9: return Term::pair(gen(a.left(), d), gen(a.right(), d));
      case 10: return r_.chance(0.3) ? Term::nil() : Term::cons(gen(nat(), d), gen(a, d));
      case 11: {
        std::string x = fresh("x");
        return Term::lam(x, a.dom(), with_var(x, a.dom(), [&] { return gen(a.cod(), d); }));
      }
      default: return recursive(a, d);
    }
  }

  // rec f x. ifz x base step, or the fix equivalent under call by name.
  Term recursive(const Type& a, int d) {
    std::string f = fresh("f"), x = fresh("x");
    Term base = with_var(x, nat(), [&] { return gen(a.cod(), d); });
    calls_.push_back({f, x, a.cod(), 1});
    Term step = with_var(x, nat(), [&] { return gen(a.cod(), d); });
    calls_.pop_back();
    Term body = Term::ifz(Term::var(x), base, step);
    if (cbv()) return Term::rec(f, x, nat(), a.cod(), body);
    return Term::fix(f, a, Term::lam(x, nat(), body));
  }

  GenConfig cfg_;
};

class RecurrenceGen : Scoped {
 public:
  explicit RecurrenceGen(const PcfcGenConfig& cfg, const pcf::TypingContext& ctx) : Scoped(cfg.seed), cfg_(cfg) {
    auto entries = ctx.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) vars_.push_back({it->first, it->second});
  }

  Term leaf(const Type& a) {
    auto vs = vars_of(a);
    if (!vs.empty() && r_.chance(0.6)) return Term::var(vs[r_.below(static_cast<int>(vs.size()))]->name);
    if (r_.chance(cfg_.divergence_rate)) {
      std::string y = fresh("w");
      return Term::fix(y, a, Term::var(y));
    }
    switch (a.kind()) {
      case TypeKind::Nat: return Term::num(r_.below(6));
      case TypeKind::Cost:
        switch (r_.below(3)) {
          case 0: return Term::czero();
          case 1: return Term::cone();
          default: return Term::cnum(r_.below(6));
        }
      case TypeKind::Prod: return Term::pair(leaf(a.left()), leaf(a.right()));
      case TypeKind::Arrow: {
        std::string x = fresh("x");
        return Term::lam(x, a.dom(), with_var(x, a.dom(), [&] { return leaf(a.cod()); }));
      }
      default: throw UnsupportedType("cannot generate " + pcf::to_string(a));
    }
  }

  Term gen(const Type& a, int depth) {
    if (depth <= 1) return leaf(a);
    int d = depth - 1;
    bool is_nat = a.is(TypeKind::Nat);
    bool is_cost = a.is(TypeKind::Cost);
    bool is_prod = a.is(TypeKind::Prod);
    bool is_arrow = a.is(TypeKind::Arrow) && a.dom().is(TypeKind::Nat);
    bool self = can_self_call(a);
    switch (r_.pick({2, is_nat ? 4.0 : 0, is_cost ? 4.0 : 0, 2, 1.5, 1.5, self ? 5.0 : 0, 1, is_prod ? 3.0 : 0,
                     is_arrow ? 3.0 : 0, is_arrow ? 6.0 * cfg_.recursion_rate : 0})) {
      case 0: return leaf(a);
      case 1: return Term::arith(random_op(r_), gen(nat(), d), gen(nat(), d));
      case 2: return Term::cplus(gen(a, d), gen(a, d));
      case 3: return Term::ifz(gen(nat(), d), gen(a, d), gen(a, d));
      case 4: {
        Type b = r_.chance(0.7) ? nat() : Type::cost();
        Term bound = gen(b, d);
        std::string x = fresh("v");
        return Term::app(Term::lam(x, b, with_var(x, b, [&] { return gen(a, d); })), bound);
      }
      case 5: return Term::app(gen(Type::arrow(nat(), a), d), gen(nat(), d));
      case 6: return *self_call(a);
      case 7: {
        Type other = r_.chance(0.5) ? nat() : Type::cost();
        bool first = r_.chance(0.5);
        Type p = first ? Type::prod(a, other) : Type::prod(other, a);
        return Term::proj(first ? 1 : 2, gen(p, d));
      }
      case 8: return Term::pair(gen(a.left(), d), gen(a.right(), d));
      case 9: {
        std::string x = fresh("x");
        return Term::lam(x, a.dom(), with_var(x, a.dom(), [&] { return gen(a.cod(), d); }));
      }
      default: {
        std::string f = fresh("f"), x = fresh("x");
        Term base = with_var(x, nat(), [&] { return gen(a.cod(), d); });
        calls_.push_back({f, x, a.cod(), 1});
        Term step = with_var(x, nat(), [&] { return gen(a.cod(), d); });
        calls_.pop_back();
        return Term::fix(f, a, Term::lam(x, nat(), Term::ifz(Term::var(x), base, step)));
      }
    }
  }

  // A term in which `self` (of type nat or nat -> nat) may be used anywhere.
  Term open_body(const std::string& self, const Type& a, int depth) {
    return with_var(self, a, [&] { return gen(a, depth); });
  }

  Random& random() { return r_; }

 private:
  PcfcGenConfig cfg_;
};

// Child positions of t, as paths from the root.
void positions(const Term& t, std::vector<int>& path, std::vector<std::vector<int>>& out) {
  out.push_back(path);
  for (int i = 0; i < t.arity(); ++i) {
    path.push_back(i);
    positions(t.kid(i), path, out);
    path.pop_back();
  }
}

const Term& at(const Term& t, const std::vector<int>& path, std::size_t i = 0) {
  return i == path.size() ? t : at(t.kid(path[i]), path, i + 1);
}

Term replace(const Term& t, const std::vector<int>& path, const Term& by, std::size_t i = 0) {
  if (i == path.size()) return by;
  std::array<Term, 3> kids;
  for (int k = 0; k < t.arity(); ++k) kids[k] = t.kid(k);
  kids[path[i]] = replace(t.kid(path[i]), path, by, i + 1);
  return t.rebuild(kids);
}

}  // namespace

Term gen_program(const GenConfig& cfg) { return ProgramGen(cfg).program(); }

Term shrink(const Term& t, Strategy s, const std::function<bool(const Term&)>& keep, unsigned max_rounds) {
  Type type = pcf::typecheck_pcf({}, t, s);
  auto well_typed = [&](const Term& c) {
    try {
      return pcf::typecheck_pcf({}, c, s) == type;
    } catch (const TypeError&) {
      return false;
    }
  };
  Term cur = t;
  for (unsigned round = 0; round < max_rounds; ++round) {
    std::vector<std::vector<int>> paths;
    std::vector<int> path;
    positions(cur, path, paths);
    bool improved = false;
    for (const auto& p : paths) {
      const Term& sub = at(cur, p);
      std::vector<Term> candidates = {Term::num(0), Term::nil()};
      for (int i = 0; i < sub.arity(); ++i) candidates.push_back(sub.kid(i));
      for (const Term& c : candidates) {
        if (c.size() >= sub.size() || pcf::alpha_equal(c, sub)) continue;
        Term next = replace(cur, p, c);
        if (well_typed(next) && keep(next)) {
          cur = next;
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
    if (!improved) break;
  }
  return cur;
}

Term gen_pcfc_term(const PcfcGenConfig& cfg, const Type& a, const pcf::TypingContext& ctx) {
  return RecurrenceGen(cfg, ctx).gen(a, static_cast<int>(cfg.max_depth));
}

FixBody gen_fix_body(std::uint64_t seed) {
  PcfcGenConfig cfg{seed, 4, 0.2, 0.02};
  RecurrenceGen g(cfg, {});
  FixBody out;
  out.var = "self";
  if (g.random().chance(0.25)) {
    out.type = Type::nat();
    out.body = g.open_body(out.var, out.type, 4);
    return out;
  }
  out.type = Type::arrow(Type::nat(), Type::nat());
  // Mostly structural recursion on y, sometimes anything at all.
  pcf::TypingContext inner = pcf::TypingContext{}.extend(out.var, out.type).extend("y", Type::nat());
  RecurrenceGen body_gen(PcfcGenConfig{seed + 1, 4, 0.2, 0.02}, inner);
  Term base = body_gen.gen(Type::nat(), 3);
  Term step = body_gen.gen(Type::nat(), 4);
  if (g.random().chance(0.7)) {
    Term call = Term::app(Term::var(out.var), Term::arith(ArithOp::Sub, Term::var("y"), Term::num(1)));
    step = Term::arith(g.random().chance(0.5) ? ArithOp::Add : ArithOp::Mul, call, step);
    out.body = Term::lam("y", Type::nat(), Term::ifz(Term::var("y"), base, step));
  } else {
    out.body = Term::lam("y", Type::nat(), step);
  }
  return out;
}

const std::vector<std::string>& simplifier_rules() {
  static const std::vector<std::string> rules = {"beta",       "proj-beta",  "ifz-zero",       "ifz-same",
                                                 "zero-left",  "zero-right", "assoc",          "cost-fold",
                                                 "arith-fold", "unit",       "commute-proj-ifz", "succ-pred",
                                                 "eta-pair",   "eta-lam"};
  return rules;
}

pcf::TypingContext rule_instance_context() {
  return pcf::TypingContext{}
      .extend("a", Type::nat())
      .extend("b", Type::nat())
      .extend("c", Type::cost())
      .extend("d", Type::cost());
}

RuleInstance gen_rule_instance(std::string_view rule, std::uint64_t seed) {
  pcf::TypingContext ctx = rule_instance_context();
  PcfcGenConfig cfg{seed, 3, 0.2, 0.02};
  RecurrenceGen g(cfg, ctx);
  Random& r = g.random();
  Type nat = Type::nat(), cost = Type::cost();
  auto ground = [&] { return r.chance(0.5) ? nat : cost; };
  auto sub = [&](const Type& a) { return g.gen(a, 3); };
  RuleInstance out;
  out.rules = simplify::RuleSet{};
  if (rule == "beta") {
    Type a = ground(), b = ground();
    Term arg = sub(a);
    std::string x = "z";
    PcfcGenConfig inner{seed + 7, 3, 0.2, 0.02};
    Term body = gen_pcfc_term(inner, b, ctx.extend(x, a));
    out.term = Term::app(Term::lam(x, a, body), arg);
    out.type = b;
  } else if (rule == "proj-beta") {
    Type a = ground(), b = ground();
    int i = 1 + r.below(2);
    out.term = Term::proj(i, Term::pair(sub(a), sub(b)));
    out.type = i == 1 ? a : b;
  } else if (rule == "ifz-zero") {
    Type a = ground();
    out.term = Term::ifz(Term::num(0), sub(a), sub(a));
    out.type = a;
  } else if (rule == "ifz-same") {
    Type a = ground();
    Term n = sub(a);
    out.term = Term::ifz(Term::num(r.below(5)), n, n);
    out.type = a;
  } else if (rule == "zero-left") {
    out.term = Term::cplus(Term::czero(), sub(cost));
    out.type = cost;
  } else if (rule == "zero-right") {
    out.term = Term::cplus(sub(cost), Term::czero());
    out.type = cost;
  } else if (rule == "assoc") {
    out.term = Term::cplus(Term::cplus(sub(cost), sub(cost)), sub(cost));
    out.type = cost;
  } else if (rule == "cost-fold") {
    out.term = Term::cplus(Term::cnum(r.below(5)), Term::cplus(Term::cnum(r.below(5)), sub(cost)));
    out.type = cost;
  } else if (rule == "arith-fold") {
    static const ArithOp ops[] = {ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div};
    out.term = Term::arith(ops[r.below(4)], Term::num(r.below(9)), Term::num(r.below(4)));
    out.type = nat;
  } else if (rule == "unit") {
    static const ArithOp ops[] = {ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div};
    ArithOp op = ops[r.below(4)];
    Nat unit = op == ArithOp::Add || op == ArithOp::Sub ? 0 : 1;
    out.term = Term::arith(op, sub(nat), Term::num(unit));
    out.type = nat;
  } else if (rule == "commute-proj-ifz") {
    Type a = ground(), b = ground();
    Type p = Type::prod(a, b);
    int i = 1 + r.below(2);
    out.term = Term::proj(i, Term::ifz(sub(nat), sub(p), sub(p)));
    out.type = i == 1 ? a : b;
  } else if (rule == "succ-pred") {
    out.term = Term::arith(ArithOp::Sub, Term::arith(ArithOp::Add, sub(nat), Term::num(1)), Term::num(1));
    out.type = nat;
    out.rules.lists = true;
  } else if (rule == "eta-pair") {
    Type p = Type::prod(ground(), ground());
    Term m = sub(p);
    out.term = Term::pair(Term::proj(1, m), Term::proj(2, m));
    out.type = p;
    out.rules.eta = true;
  } else if (rule == "eta-lam") {
    Type f = Type::arrow(nat, ground());
    Term m = sub(f);
    std::string x = "eta";
    out.term = Term::lam(x, nat, Term::app(m, Term::var(x)));
    out.type = f;
    out.rules.eta = true;
  } else {
    throw Error("unknown rule '" + std::string(rule) + "'");
  }
  return out;
}

model::Env ground_instantiation(const pcf::TypingContext& ctx, std::uint64_t seed) {
  Random r(seed);
  model::Env env;
  auto entries = ctx.entries();
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    const Type& a = it->second;
    if (!a.is(TypeKind::Nat) && !a.is(TypeKind::Cost)) throw UnsupportedType("not a ground type");
    model::SizedValue v = r.below(10) == 0 ? model::SizedValue::bottom() : model::SizedValue::fin(r.below(10));
    env = env.extend(it->first, model::Thunk::ready(v));
  }
  return env;
}

}  // namespace recx::workbench
