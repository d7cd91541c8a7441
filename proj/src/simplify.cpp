#include "recx/simplify.hpp"

#include <algorithm>
#include <optional>

#include "recx/support/errors.hpp"

namespace recx::simplify {

using pcf::Tag;
using pcf::Term;

RuleSet RuleSet::parse(std::string_view spec) {
  RuleSet r;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    std::string_view part = spec.substr(0, comma);
    if (part == "eta")
      r.eta = true;
    else if (part == "lists")
      r.lists = true;
    else if (part != "core")
      throw Error("unknown rule set '" + std::string(part) + "'");
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
  }
  return r;
}

namespace {

bool is_cost_literal(const Term& t) { return t.is(Tag::CZero) || t.is(Tag::COne) || t.is(Tag::CNum); }

Nat cost_literal(const Term& t) {
  if (t.is(Tag::CZero)) return 0;
  if (t.is(Tag::COne)) return 1;
  return t.number();
}

Term cost(const Nat& k) {
  if (k == 0) return Term::czero();
  if (k == 1) return Term::cone();
  return Term::cnum(k);
}

bool is_zero_cost(const Term& t) { return is_cost_literal(t) && cost_literal(t) == 0; }

// The model treats - and div against a literal differently from the general
// case, so a general right operand must never become a literal.
bool frozen_operand(const Term& t, int i) {
  return t.is(Tag::Arith) && i == 1 && (t.op() == ArithOp::Sub || t.op() == ArithOp::Div) && !t.kid(1).is(Tag::Num);
}

bool occurs_frozen(const std::string& x, const Term& t) {
  for (int i = 0; i < t.arity(); ++i) {
    auto bound = pcf::binders(t, i);
    if (std::find(bound.begin(), bound.end(), x) != bound.end()) continue;
    if (frozen_operand(t, i) && pcf::occurs_free(x, t.kid(i))) return true;
    if (occurs_frozen(x, t.kid(i))) return true;
  }
  return false;
}

bool contains_fix(const Term& t) {
  if (t.is(Tag::Fix)) return true;
  for (int i = 0; i < t.arity(); ++i)
    if (contains_fix(t.kid(i))) return true;
  return false;
}

// Size added by substituting a pair for x when every use of x is projected,
// since each projection then reduces to one component. nullopt if some use
// is not projected.
std::optional<std::size_t> projected_growth(const std::string& x, const Term& t, const Term& pair) {
  if (t.is(Tag::Proj) && t.kid(0).is(Tag::Var) && t.kid(0).name() == x) return pair.kid(t.index() - 1).size();
  if (t.is(Tag::Var)) return t.name() == x ? std::nullopt : std::optional<std::size_t>(0);
  std::size_t total = 0;
  for (int i = 0; i < t.arity(); ++i) {
    auto bound = pcf::binders(t, i);
    if (std::find(bound.begin(), bound.end(), x) != bound.end()) continue;
    auto g = projected_growth(x, t.kid(i), pair);
    if (!g) return std::nullopt;
    total += *g;
  }
  return total;
}

bool beta_ok(const Term& lam, const Term& arg) {
  const std::string& x = lam.name();
  const Term& body = lam.body();
  if (!arg.is(Tag::Var) && occurs_frozen(x, body)) return false;
  std::size_t uses = pcf::count_free(x, body);
  if (uses <= 1) return true;
  if (contains_fix(arg)) return arg.size() <= 3;
  std::size_t growth = uses * arg.size();
  if (arg.is(Tag::Pair))
    if (auto g = projected_growth(x, body, arg)) growth = std::min(growth, *g);
  return arg.size() <= 3 || growth <= 60;
}

class Simplifier {
 public:
  explicit Simplifier(RuleSet rules) : rules_(rules) {}

  Term pass(const Term& t) {
    std::array<Term, 3> kids;
    bool changed = false;
    for (int i = 0; i < t.arity(); ++i) {
      kids[i] = frozen_operand(t, i) ? t.kid(i) : pass(t.kid(i));
      changed |= !kids[i].same_node(t.kid(i));
    }
    Term cur = changed ? t.rebuild(kids) : t;
    // Rewrite at the root until nothing applies; redexes created below the
    // root are left for the next pass.
    for (int guard = 0; guard < 64; ++guard) {
      auto next = rewrite(cur);
      if (!next) break;
      cur = *next;
    }
    return cur;
  }

 private:
  std::optional<Term> rewrite(const Term& t) {
    switch (t.tag()) {
      case Tag::App: {
        const Term& f = t.kid(0);
        if (f.is(Tag::Lam) && beta_ok(f, t.kid(1))) return pcf::subst(f.body(), f.name(), t.kid(1));
        break;
      }
      case Tag::Proj: {
        const Term& p = t.kid(0);
        if (p.is(Tag::Pair)) return p.kid(t.index() - 1);
        if (p.is(Tag::IfZ))
          return Term::ifz(p.kid(0), Term::proj(t.index(), p.kid(1)), Term::proj(t.index(), p.kid(2)));
        break;
      }
      case Tag::IfZ: {
        const Term& n = t.kid(0);
        if (n.is(Tag::Num) && n.number() == 0) return t.kid(1);
        if (n.is(Tag::Num) && pcf::alpha_equal(t.kid(1), t.kid(2))) return t.kid(1);
        break;
      }
      case Tag::CPlus: return rewrite_plus(t);
      case Tag::Arith: return rewrite_arith(t);
      case Tag::Pair:
        if (rules_.eta && t.kid(0).is(Tag::Proj) && t.kid(1).is(Tag::Proj) && t.kid(0).index() == 1 &&
            t.kid(1).index() == 2 && pcf::alpha_equal(t.kid(0).kid(0), t.kid(1).kid(0)))
          return t.kid(0).kid(0);
        break;
      case Tag::Lam:
        if (rules_.eta && t.body().is(Tag::App) && t.body().kid(1).is(Tag::Var) &&
            t.body().kid(1).name() == t.name() && !pcf::occurs_free(t.name(), t.body().kid(0)))
          return t.body().kid(0);
        break;
      default: break;
    }
    return std::nullopt;
  }

  // Sums are kept as k + (a + (b + ...)) with one literal at the front.
  std::optional<Term> rewrite_plus(const Term& t) {
    const Term& a = t.kid(0);
    const Term& b = t.kid(1);
    if (is_cost_literal(a) && is_cost_literal(b)) return cost(cost_literal(a) + cost_literal(b));
    if (is_zero_cost(a)) return b;
    if (is_zero_cost(b)) return a;
    if (a.is(Tag::CPlus)) return Term::cplus(a.kid(0), Term::cplus(a.kid(1), b));
    if (is_cost_literal(b)) return Term::cplus(b, a);
    if (b.is(Tag::CPlus) && is_cost_literal(b.kid(0))) {
      if (is_cost_literal(a)) return Term::cplus(cost(cost_literal(a) + cost_literal(b.kid(0))), b.kid(1));
      return Term::cplus(b.kid(0), Term::cplus(a, b.kid(1)));
    }
    return std::nullopt;
  }

  std::optional<Term> rewrite_arith(const Term& t) {
    const Term& a = t.kid(0);
    const Term& b = t.kid(1);
    bool lit_a = a.is(Tag::Num), lit_b = b.is(Tag::Num);
    switch (t.op()) {
      case ArithOp::Add:
        if (lit_a && lit_b) return Term::num(a.number() + b.number());
        if (lit_b && b.number() == 0) return a;
        if (lit_a && a.number() == 0) return b;
        break;
      case ArithOp::Mul:
        if (lit_a && lit_b) return Term::num(a.number() * b.number());
        if (lit_b && b.number() == 1) return a;
        if (lit_a && a.number() == 1) return b;
        break;
      case ArithOp::Sub:
        if (lit_a && lit_b) return Term::num(apply_arith(ArithOp::Sub, a.number(), b.number()));
        if (lit_b && b.number() == 0) return a;
        if (rules_.lists && lit_b && b.number() == 1 && a.is(Tag::Arith) && a.op() == ArithOp::Add &&
            a.kid(1).is(Tag::Num) && a.kid(1).number() == 1)
          return a.kid(0);
        break;
      case ArithOp::Div:
        if (lit_a && lit_b) return Term::num(apply_arith(ArithOp::Div, a.number(), b.number()));
        if (lit_b && b.number() == 1) return a;
        break;
      case ArithOp::Mod: break;
    }
    return std::nullopt;
  }

  RuleSet rules_;
};

}  // namespace

Term simplify(const Term& t, RuleSet rules, unsigned max_passes) {
  Simplifier s(rules);
  Term cur = t;
  for (unsigned i = 0; i < max_passes; ++i) {
    Term next = s.pass(cur);
    if (next.same_node(cur) || pcf::alpha_equal(next, cur)) return next;
    cur = next;
  }
  return cur;
}

}  // namespace recx::simplify
