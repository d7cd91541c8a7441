#include "recx/extract.hpp"

#include "recx/embed.hpp"
#include "recx/support/errors.hpp"
#include "recx/support/names.hpp"

namespace recx::extract {

using cbpv::CKind;
using cbpv::Comp;
using cbpv::CompType;
using cbpv::CTag;
using cbpv::Value;
using cbpv::ValType;
using cbpv::VKind;
using cbpv::VTag;
using pcf::Tag;
using pcf::Term;
using pcf::Type;

pcf::Type potential_type(const ValType& a) {
  switch (a.kind()) {
    case VKind::Nat:
    case VKind::List:
    case VKind::Unknown: return Type::nat();
    case VKind::Prod: return Type::prod(potential_type(a.left()), potential_type(a.right()));
    case VKind::U: return complexity_algebra(a.comp()).carrier;
  }
  return Type::nat();
}

pcfc::CostAlgebra complexity_algebra(const CompType& b) { return pcfc::algebra_for(b, potential_type); }

namespace {

// Terms small enough to duplicate freely when substituting.
bool cheap(const Term& t) {
  switch (t.tag()) {
    case Tag::Var:
    case Tag::Num:
    case Tag::CZero:
    case Tag::COne:
    case Tag::CNum: return true;
    case Tag::Proj: return cheap(t.kid(0));
    case Tag::Pair:
    case Tag::Arith:
    case Tag::CPlus: return t.size() <= 5 && cheap(t.kid(0)) && cheap(t.kid(1));
    case Tag::Fix: return t.body().is(Tag::Var) && t.body().name() == t.name();
    default: return false;
  }
}

[[noreturn]] void bad(const std::string& msg) { throw TypeError(msg); }

class Extractor {
 public:
  explicit Extractor(std::set<std::string> names) : names_(std::move(names)) {
    names_.reserve(pcfc::CostAlgebra::kCost);
    names_.reserve(pcfc::CostAlgebra::kValue);
    names_.reserve("y");
  }

  struct V {
    Term term;
    ValType type;
  };
  struct C {
    Term term;
    CompType type;
  };

  V value(const cbpv::Context& ctx, const Value& v) {
    switch (v.tag()) {
      case VTag::Var: {
        const ValType* a = ctx.find(v.name());
        if (!a) bad("unbound variable " + v.name());
        return {Term::var(v.name()), *a};
      }
      case VTag::Num: return {Term::num(v.number()), ValType::nat()};
      case VTag::Pair: {
        V a = value(ctx, v.kid(0)), b = value(ctx, v.kid(1));
        return {Term::pair(a.term, b.term), ValType::prod(a.type, b.type)};
      }
      case VTag::Thunk: {
        C m = comp(ctx, v.comp());
        return {m.term, ValType::thunk(m.type)};
      }
      case VTag::Nil: return {Term::num(0), ValType::list(ValType::unknown())};
      case VTag::Cons: {
        V h = value(ctx, v.kid(0)), t = value(ctx, v.kid(1));
        auto u = cbpv::unify(t.type, ValType::list(h.type));
        if (!u) bad("ill-typed cons");
        return {Term::arith(ArithOp::Add, t.term, Term::num(1)), *u};
      }
    }
    bad("unknown value");
  }

  C comp(const cbpv::Context& ctx, const Comp& m) {
    switch (m.tag()) {
      case CTag::Return: {
        V v = value(ctx, m.val(0));
        return {Term::pair(Term::czero(), v.term), CompType::free(v.type)};
      }
      case CTag::Bind: {
        C first = comp(ctx, m.comp(0));
        if (!first.type.is(CKind::F)) bad("bind of non-returner");
        C rest = comp(ctx.extend(m.name(), first.type.val()), m.comp(1));
        auto alg = complexity_algebra(rest.type);
        // ||M||_c +_B ||N||[||M||_p / x], sharing ||M|| through one redex.
        Type mtype = complexity_algebra(first.type).carrier;
        std::string r = names_.fresh("r");
        Term body = add_cost(alg, Term::proj(1, Term::var(r)), pcf::subst(rest.term, m.name(), Term::proj(2, Term::var(r))));
        return {Term::app(Term::lam(r, mtype, body), first.term), rest.type};
      }
      case CTag::Force: {
        V v = value(ctx, m.val(0));
        if (!v.type.is(VKind::U)) bad("force of non-thunk");
        return {v.term, v.type.comp()};
      }
      case CTag::Lam: {
        C body = comp(ctx.extend(m.name(), m.vtype()), m.comp(0));
        return {Term::lam(m.name(), potential_type(m.vtype()), body.term), CompType::arrow(m.vtype(), body.type)};
      }
      case CTag::App: {
        C f = comp(ctx, m.comp(0));
        if (!f.type.is(CKind::Arrow)) bad("application of non-function");
        V a = value(ctx, m.val(0));
        return {Term::app(f.term, a.term), f.type.cod()};
      }
      case CTag::CPair: {
        C a = comp(ctx, m.comp(0)), b = comp(ctx, m.comp(1));
        return {Term::pair(a.term, b.term), CompType::with(a.type, b.type)};
      }
      case CTag::Proj: {
        C p = comp(ctx, m.comp(0));
        if (!p.type.is(CKind::With)) bad("projection from non-pair");
        return {Term::proj(m.index(), p.term), m.index() == 1 ? p.type.left() : p.type.right()};
      }
      case CTag::Split: {
        V v = value(ctx, m.val(0));
        if (!v.type.is(VKind::Prod)) bad("split of non-pair");
        C body = comp(ctx.extend(m.name(), v.type.left()).extend(m.name2(), v.type.right()), m.comp(0));
        return {share(v.term, potential_type(v.type),
                      [&](const Term& p) {
                        return pcf::subst(body.term, {{m.name(), Term::proj(1, p)}, {m.name2(), Term::proj(2, p)}});
                      }),
                body.type};
      }
      case CTag::IfZ: {
        V v = value(ctx, m.val(0));
        C p = comp(ctx, m.comp(0)), q = comp(ctx, m.comp(1));
        auto u = cbpv::unify(p.type, q.type);
        if (!u) bad("ifz branches differ");
        return {Term::ifz(v.term, p.term, q.term), *u};
      }
      case CTag::Calc: {
        V a = value(ctx, m.val(0)), b = value(ctx, m.val(1));
        C body = comp(ctx.extend(m.name(), ValType::nat()), m.comp(0));
        return {pcf::subst(body.term, m.name(), operation_potential(m.op(), a.term, b.term, m.val(1))), body.type};
      }
      case CTag::Charge: {
        C body = comp(ctx, m.comp(0));
        return {add_cost(complexity_algebra(body.type), Term::cone(), body.term), body.type};
      }
      case CTag::Fix: {
        C body = comp(ctx.extend(m.name(), ValType::thunk(m.ctype())), m.comp(0));
        return {Term::fix(m.name(), complexity_algebra(m.ctype()).carrier, body.term), m.ctype()};
      }
      case CTag::LCase: {
        V v = value(ctx, m.val(0));
        if (!v.type.is(VKind::List)) bad("lcase on non-list");
        ValType elem = v.type.elem();
        C nil = comp(ctx, m.comp(0));
        C cons = comp(ctx.extend(m.name(), elem).extend(m.name2(), v.type), m.comp(1));
        auto u = cbpv::unify(nil.type, cons.type);
        if (!u) bad("lcase branches differ");
        // The head's potential is unknown, so it is infinity (fix z.z).
        std::string z = names_.fresh("z");
        Term omega = Term::fix(z, potential_type(elem), Term::var(z));
        Term out = share(v.term, Type::nat(), [&](const Term& len) {
          Term tail = Term::arith(ArithOp::Sub, len, Term::num(1));
          return Term::ifz(len, nil.term, pcf::subst(cons.term, {{m.name(), omega}, {m.name2(), tail}}));
        });
        return {out, *u};
      }
    }
    bad("unknown computation");
  }

 private:
  // Potential of op(a, b), an upper bound on its value.
  static Term operation_potential(ArithOp op, const Term& a, const Term& b, const Value& rhs) {
    switch (op) {
      case ArithOp::Add:
      case ArithOp::Mul: return Term::arith(op, a, b);
      case ArithOp::Sub:
      case ArithOp::Div:
        if (rhs.is(VTag::Num)) return Term::arith(op, a, b);
        return a;
      case ArithOp::Mod: return Term::arith(ArithOp::Sub, b, Term::num(1));
    }
    return a;
  }

  // alpha(cost, e), routing e through a redex when duplicating it would
  // repeat real work.
  Term add_cost(const pcfc::CostAlgebra& alg, const Term& cost, const Term& e) {
    return share(e, alg.carrier, [&](const Term& x) { return alg.apply(cost, x); });
  }

  template <class F>
  Term share(const Term& e, const Type& type, F&& use) {
    if (cheap(e)) return use(e);
    std::string z = names_.fresh("s");
    return Term::app(Term::lam(z, type, use(Term::var(z))), e);
  }

  NameSupply names_;
};

std::set<std::string> names_in(const cbpv::Context& ctx) {
  std::set<std::string> out;
  for (auto& [k, v] : ctx.entries()) out.insert(k);
  return out;
}

}  // namespace

ExtractionResult potential(const Value& v, const cbpv::Context& ctx) {
  auto names = names_in(ctx);
  auto inner = cbpv::all_names(Comp::ret(v));
  names.insert(inner.begin(), inner.end());
  Extractor ex(names);
  auto r = ex.value(ctx, v);
  return {r.term, potential_type(r.type)};
}

ExtractionResult complexity(const Comp& m, const cbpv::Context& ctx) {
  auto names = names_in(ctx);
  auto inner = cbpv::all_names(m);
  names.insert(inner.begin(), inner.end());
  Extractor ex(names);
  auto r = ex.comp(ctx, m);
  return {r.term, complexity_algebra(r.type).carrier};
}

Term potential_term(const Value& v, const cbpv::Context& ctx) { return potential(v, ctx).term; }
Term complexity_term(const Comp& m, const cbpv::Context& ctx) { return complexity(m, ctx).term; }

ExtractionResult extract(const pcf::Term& t, pcf::Strategy s) {
  auto e = embed::embed(t, s);
  return complexity(e.term);
}

Term extract_cbv(const pcf::Term& t) { return extract(t, pcf::Strategy::CBV).term; }
Term extract_cbn(const pcf::Term& t) { return extract(t, pcf::Strategy::CBN).term; }

pcf::TypingContext potential_context(const cbpv::Context& ctx) {
  auto entries = ctx.entries();
  pcf::TypingContext out;
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) out = out.extend(it->first, potential_type(it->second));
  return out;
}

}  // namespace recx::extract
