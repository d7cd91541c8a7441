#include "recx/pcf/typecheck.hpp"

namespace recx::pcf {

namespace {

std::string show(const Type& t) { return to_string(t); }

class Checker {
 public:
  Checker(Strategy s, Language lang) : s_(s), lang_(lang) {}

  Typed check(const TypingContext& ctx, const Term& t) {
    switch (t.tag()) {
      case Tag::Var: {
        const Type* a = ctx.find(t.name());
        if (!a) throw TypeError("unbound variable " + t.name(), t.loc());
        return {t, *a};
      }
      case Tag::Num: return {t, Type::nat()};
      case Tag::Arith: {
        auto m = expect(ctx, t.kid(0), Type::nat(), "arithmetic operand");
        auto n = expect(ctx, t.kid(1), Type::nat(), "arithmetic operand");
        return {t.rebuild({m, n, {}}), Type::nat()};
      }
      case Tag::IfZ: {
        auto c = expect(ctx, t.kid(0), Type::nat(), "ifz scrutinee");
        auto p = check(ctx, t.kid(1));
        auto q = check(ctx, t.kid(2));
        auto u = unify(p.type, q.type);
        if (!u) throw TypeError("ifz branches differ: " + show(p.type) + " vs " + show(q.type), t.loc());
        return {t.rebuild({c, p.term, q.term}), *u};
      }
      case Tag::Pair: {
        auto a = check(ctx, t.kid(0));
        auto b = check(ctx, t.kid(1));
        return {t.rebuild({a.term, b.term, {}}), Type::prod(a.type, b.type)};
      }
      case Tag::Proj: {
        auto m = check(ctx, t.kid(0));
        if (m.type.is(TypeKind::Unknown)) return {t.rebuild({m.term, {}, {}}), Type::unknown()};
        if (!m.type.is(TypeKind::Prod)) throw TypeError("projection from non-product " + show(m.type), t.loc());
        return {t.rebuild({m.term, {}, {}}), t.index() == 1 ? m.type.left() : m.type.right()};
      }
      case Tag::Lam: {
        if (t.annot().is(TypeKind::Unknown))
          throw TypeError("cannot infer the type of " + t.name(), t.loc());
        admissible(t.annot(), t.loc());
        auto b = check(ctx.extend(t.name(), t.annot()), t.body());
        return {t.rebuild({b.term, {}, {}}), Type::arrow(t.annot(), b.type)};
      }
      case Tag::App: {
        const Term& f = t.kid(0);
        if (f.is(Tag::Lam) && f.annot().is(TypeKind::Unknown)) {
          // let x = M in N: the binder takes M's type.
          auto arg = check(ctx, t.kid(1));
          auto lam = check(ctx, f.with_annot(arg.type));
          return {t.rebuild({lam.term, arg.term, {}}), lam.type.cod()};
        }
        auto fn = check(ctx, f);
        auto arg = check(ctx, t.kid(1));
        if (fn.type.is(TypeKind::Unknown)) return {t.rebuild({fn.term, arg.term, {}}), Type::unknown()};
        if (!fn.type.is(TypeKind::Arrow)) throw TypeError("application of non-function " + show(fn.type), t.loc());
        if (!unify(fn.type.dom(), arg.type))
          throw TypeError("argument type " + show(arg.type) + " does not match " + show(fn.type.dom()), t.kid(1).loc());
        return {t.rebuild({fn.term, arg.term, {}}), fn.type.cod()};
      }
      case Tag::Fix: {
        if (s_ == Strategy::CBV)
          throw StrategyError("fix is not available under CBV; use rec", t.loc());
        admissible(t.annot(), t.loc());
        auto b = expect(ctx.extend(t.name(), t.annot()), t.body(), t.annot(), "fixed-point body");
        return {t.rebuild({b, {}, {}}), t.annot()};
      }
      case Tag::Rec: {
        if (s_ == Strategy::CBN || lang_ == Language::Pcfc)
          throw StrategyError("rec is only available under CBV; use fix", t.loc());
        admissible(t.annot(), t.loc());
        admissible(t.annot2(), t.loc());
        Type fn = Type::arrow(t.annot(), t.annot2());
        auto inner = ctx.extend(t.name(), fn).extend(t.name2(), t.annot());
        auto b = expect(inner, t.body(), t.annot2(), "recursive function body");
        return {t.rebuild({b, {}, {}}), fn};
      }
      case Tag::Nil:
        cbv_only(t, "nil");
        return {t, Type::list(Type::unknown())};
      case Tag::Cons: {
        cbv_only(t, "cons");
        auto h = check(ctx, t.kid(0));
        auto tl = check(ctx, t.kid(1));
        auto u = unify(tl.type, Type::list(h.type));
        if (!u) throw TypeError("cons tail " + show(tl.type) + " does not hold " + show(h.type), t.loc());
        return {t.rebuild({h.term, tl.term, {}}), *u};
      }
      case Tag::LCase: {
        cbv_only(t, "lcase");
        auto l = check(ctx, t.kid(0));
        Type elem = Type::unknown();
        if (l.type.is(TypeKind::List))
          elem = l.type.elem();
        else if (!l.type.is(TypeKind::Unknown))
          throw TypeError("lcase on non-list " + show(l.type), t.loc());
        auto n = check(ctx, t.kid(1));
        auto c = check(ctx.extend(t.name(), elem).extend(t.name2(), Type::list(elem)), t.kid(2));
        auto u = unify(n.type, c.type);
        if (!u) throw TypeError("lcase branches differ: " + show(n.type) + " vs " + show(c.type), t.loc());
        return {t.rebuild({l.term, n.term, c.term}), *u};
      }
      case Tag::CZero:
      case Tag::COne:
      case Tag::CNum:
        cost_only(t);
        return {t, Type::cost()};
      case Tag::CPlus: {
        cost_only(t);
        auto a = expect(ctx, t.kid(0), Type::cost(), "cost sum operand");
        auto b = expect(ctx, t.kid(1), Type::cost(), "cost sum operand");
        return {t.rebuild({a, b, {}}), Type::cost()};
      }
    }
    throw TypeError("unknown term", t.loc());
  }

 private:
  Term expect(const TypingContext& ctx, const Term& t, const Type& want, const char* what) {
    auto r = check(ctx, t);
    if (!unify(r.type, want))
      throw TypeError(std::string(what) + " has type " + show(r.type) + ", expected " + show(want), t.loc());
    return r.term;
  }

  void cbv_only(const Term& t, const char* what) {
    if (s_ == Strategy::CBN || lang_ == Language::Pcfc)
      throw StrategyError(std::string(what) + " is only available under CBV", t.loc());
  }

  void cost_only(const Term& t) {
    if (lang_ != Language::Pcfc) throw TypeError("cost construct outside the recurrence language", t.loc());
  }

  void admissible(const Type& a, SourceLoc loc) { check_type_admissible(a, s_, lang_, loc); }

  Strategy s_;
  Language lang_;
};

}  // namespace

void check_type_admissible(const Type& a, Strategy s, Language lang, SourceLoc loc) {
  switch (a.kind()) {
    case TypeKind::Cost:
      if (lang != Language::Pcfc) throw TypeError("type cost outside the recurrence language", loc);
      return;
    case TypeKind::List:
      if (s == Strategy::CBN || lang == Language::Pcfc)
        throw StrategyError("list types are only available under CBV", loc);
      check_type_admissible(a.elem(), s, lang, loc);
      return;
    case TypeKind::Prod:
    case TypeKind::Arrow:
      check_type_admissible(a.left(), s, lang, loc);
      check_type_admissible(a.right(), s, lang, loc);
      return;
    default: return;
  }
}

Typed elaborate(const TypingContext& ctx, const Term& t, Strategy s, Language lang) {
  if (lang == Language::Pcfc && s != Strategy::CBN) throw StrategyError("the recurrence language is CBN");
  return Checker(s, lang).check(ctx, t);
}

Type typecheck_pcf(const TypingContext& ctx, const Term& t, Strategy s) {
  return elaborate(ctx, t, s, Language::Pcf).type;
}

}  // namespace recx::pcf
