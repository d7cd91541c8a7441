#include "recx/embed.hpp"

#include <functional>

#include "recx/support/names.hpp"

namespace recx::embed {

using cbpv::Comp;
using cbpv::CompType;
using cbpv::Value;
using cbpv::ValType;
using pcf::Tag;
using pcf::Term;
using pcf::TypeKind;

CompType embed_cbn_type(const pcf::Type& a) {
  switch (a.kind()) {
    case TypeKind::Nat: return CompType::free(ValType::nat());
    case TypeKind::Prod: return CompType::with(embed_cbn_type(a.left()), embed_cbn_type(a.right()));
    case TypeKind::Arrow: return CompType::arrow(ValType::thunk(embed_cbn_type(a.dom())), embed_cbn_type(a.cod()));
    case TypeKind::List: throw UnsupportedType("lists have no call-by-name translation");
    default: throw UnsupportedType("type " + pcf::to_string(a) + " has no call-by-name translation");
  }
}

ValType embed_cbv_type(const pcf::Type& a) {
  switch (a.kind()) {
    case TypeKind::Nat: return ValType::nat();
    case TypeKind::Prod: return ValType::prod(embed_cbv_type(a.left()), embed_cbv_type(a.right()));
    case TypeKind::Arrow:
      return ValType::thunk(CompType::arrow(embed_cbv_type(a.dom()), CompType::free(embed_cbv_type(a.cod()))));
    case TypeKind::List: return ValType::list(embed_cbv_type(a.elem()));
    case TypeKind::Unknown: return ValType::unknown();
    default: throw UnsupportedType("type " + pcf::to_string(a) + " has no call-by-value translation");
  }
}

namespace {

using Cont = std::function<Comp(Value)>;

class Cbn {
 public:
  explicit Cbn(const Term& t) : names_(pcf::all_names(t)) {}

  Comp go(const Term& t) {
    switch (t.tag()) {
      case Tag::Var: return Comp::force(Value::var(t.name()));
      case Tag::Num: return Comp::ret(Value::num(t.number()));
      case Tag::Arith:
        return operand(t.kid(0), "a", [&](Value a) {
          return operand(t.kid(1), "b", [&](Value b) {
            std::string v = names_.fresh("v");
            return Comp::calc(v, t.op(), a, b, Comp::ret(Value::var(v)));
          });
        });
      case Tag::IfZ:
        return operand(t.kid(0), "n", [&](Value n) { return Comp::ifz(n, go(t.kid(1)), go(t.kid(2))); });
      case Tag::Pair: return Comp::cpair(go(t.kid(0)), go(t.kid(1)));
      case Tag::Proj: return Comp::charge(Comp::proj(t.index(), go(t.kid(0))));
      case Tag::Lam: return Comp::lam(t.name(), ValType::thunk(embed_cbn_type(t.annot())), go(t.body()));
      case Tag::App: return Comp::charge(Comp::app(go(t.kid(0)), Value::thunk(go(t.kid(1)))));
      case Tag::Fix: return Comp::fix(t.name(), embed_cbn_type(t.annot()), go(t.body()));
      default: throw UnsupportedType("construct has no call-by-name translation");
    }
  }

 private:
  // Numeral operands are used in place so the arithmetic stays visible to
  // extraction; anything else is evaluated and bound first.
  Comp operand(const Term& m, const char* hint, const Cont& k) {
    if (m.is(Tag::Num)) return k(Value::num(m.number()));
    std::string x = names_.fresh(hint);
    return Comp::bind(x, go(m), k(Value::var(x)));
  }

  NameSupply names_;
};

class Cbv {
 public:
  explicit Cbv(const Term& t) : names_(pcf::all_names(t)) {}

  Value val(const Term& v) {
    switch (v.tag()) {
      case Tag::Num: return Value::num(v.number());
      case Tag::Var: return Value::var(v.name());
      case Tag::Pair: return Value::pair(val(v.kid(0)), val(v.kid(1)));
      case Tag::Lam: return Value::thunk(Comp::lam(v.name(), embed_cbv_type(v.annot()), go(v.body())));
      case Tag::Rec: {
        ValType dom = embed_cbv_type(v.annot());
        CompType fn = CompType::arrow(dom, CompType::free(embed_cbv_type(v.annot2())));
        return Value::thunk(Comp::fix(v.name(), fn, Comp::lam(v.name2(), dom, go(v.body()))));
      }
      case Tag::Nil: return Value::nil();
      case Tag::Cons: return Value::cons(val(v.kid(0)), val(v.kid(1)));
      default: throw UnsupportedType("not a call-by-value value");
    }
  }

  Comp go(const Term& t) {
    if (pcf::is_cbv_value(t)) return Comp::ret(val(t));
    switch (t.tag()) {
      case Tag::Arith:
        return with(t.kid(0), "a", [&](Value a) {
          return with(t.kid(1), "b", [&](Value b) {
            std::string v = names_.fresh("v");
            return Comp::calc(v, t.op(), a, b, Comp::ret(Value::var(v)));
          });
        });
      case Tag::IfZ:
        return with(t.kid(0), "n", [&](Value n) { return Comp::ifz(n, go(t.kid(1)), go(t.kid(2))); });
      case Tag::Pair:
      case Tag::Cons:
        return with(t.kid(0), "a", [&](Value a) {
          return with(t.kid(1), "b", [&](Value b) {
            return Comp::ret(t.is(Tag::Pair) ? Value::pair(a, b) : Value::cons(a, b));
          });
        });
      case Tag::Proj:
        return with(t.kid(0), "p", [&](Value p) {
          std::string x1 = names_.fresh("p1"), x2 = names_.fresh("p2");
          return Comp::split(p, x1, x2, Comp::charge(Comp::ret(Value::var(t.index() == 1 ? x1 : x2))));
        });
      case Tag::App:
        return with(t.kid(0), "f", [&](Value f) {
          return with(t.kid(1), "a", [&](Value a) { return Comp::charge(Comp::app(Comp::force(f), a)); });
        });
      case Tag::LCase:
        return with(t.kid(0), "l", [&](Value l) {
          return Comp::lcase(l, go(t.kid(1)), t.name(), t.name2(), go(t.kid(2)));
        });
      default: throw UnsupportedType("construct has no call-by-value translation");
    }
  }

 private:
  // Values are used in place; other terms are evaluated and bound first.
  Comp with(const Term& m, const char* hint, const Cont& k) {
    if (pcf::is_cbv_value(m)) return k(val(m));
    std::string x = names_.fresh(hint);
    return Comp::bind(x, go(m), k(Value::var(x)));
  }

  NameSupply names_;
};

}  // namespace

Comp embed_cbn(const Term& t) { return Cbn(t).go(t); }

Value embed_cbv_val(const Term& v) { return Cbv(v).val(v); }

Comp embed_cbv(const Term& t) { return Cbv(t).go(t); }

cbpv::Context embed_context(const pcf::TypingContext& ctx, pcf::Strategy s) {
  auto entries = ctx.entries();
  cbpv::Context out;
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    ValType a = s == pcf::Strategy::CBV ? embed_cbv_type(it->second) : ValType::thunk(embed_cbn_type(it->second));
    out = out.extend(it->first, a);
  }
  return out;
}

EmbeddingResult embed(const Term& t, pcf::Strategy s) {
  pcf::Type a = pcf::typecheck_pcf({}, t, s);
  if (s == pcf::Strategy::CBV) return {embed_cbv(t), CompType::free(embed_cbv_type(a))};
  return {embed_cbn(t), embed_cbn_type(a)};
}

}  // namespace recx::embed
