#include "recx/cbpv/typecheck.hpp"

#include "recx/support/errors.hpp"

namespace recx::cbpv {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw TypeError(msg); }

void expect_nat(const Context& ctx, const Value& v, const char* what) {
  auto a = typecheck_val(ctx, v);
  if (!unify(a, ValType::nat())) bad(std::string(what) + " has type " + to_string(a) + ", expected nat");
}

}  // namespace

ValType typecheck_val(const Context& ctx, const Value& v) {
  switch (v.tag()) {
    case VTag::Var: {
      const ValType* a = ctx.find(v.name());
      if (!a) bad("unbound variable " + v.name());
      return *a;
    }
    case VTag::Num: return ValType::nat();
    case VTag::Pair: return ValType::prod(typecheck_val(ctx, v.kid(0)), typecheck_val(ctx, v.kid(1)));
    case VTag::Thunk: return ValType::thunk(typecheck_comp(ctx, v.comp()));
    case VTag::Nil: return ValType::list(ValType::unknown());
    case VTag::Cons: {
      auto h = typecheck_val(ctx, v.kid(0));
      auto t = typecheck_val(ctx, v.kid(1));
      auto u = unify(t, ValType::list(h));
      if (!u) bad("cons tail " + to_string(t) + " does not hold " + to_string(h));
      return *u;
    }
  }
  bad("unknown value");
}

CompType typecheck_comp(const Context& ctx, const Comp& m) {
  switch (m.tag()) {
    case CTag::Return: return CompType::free(typecheck_val(ctx, m.val(0)));
    case CTag::Bind: {
      auto b = typecheck_comp(ctx, m.comp(0));
      if (!b.is(CKind::F)) bad("bind of non-returner " + to_string(b));
      return typecheck_comp(ctx.extend(m.name(), b.val()), m.comp(1));
    }
    case CTag::Force: {
      auto a = typecheck_val(ctx, m.val(0));
      if (!a.is(VKind::U)) bad("force of non-thunk " + to_string(a));
      return a.comp();
    }
    case CTag::Lam: return CompType::arrow(m.vtype(), typecheck_comp(ctx.extend(m.name(), m.vtype()), m.comp(0)));
    case CTag::App: {
      auto f = typecheck_comp(ctx, m.comp(0));
      if (!f.is(CKind::Arrow)) bad("application of non-function " + to_string(f));
      auto a = typecheck_val(ctx, m.val(0));
      if (!unify(a, f.val())) bad("argument type " + to_string(a) + " does not match " + to_string(f.val()));
      return f.cod();
    }
    case CTag::CPair: return CompType::with(typecheck_comp(ctx, m.comp(0)), typecheck_comp(ctx, m.comp(1)));
    case CTag::Proj: {
      auto b = typecheck_comp(ctx, m.comp(0));
      if (!b.is(CKind::With)) bad("projection from " + to_string(b));
      return m.index() == 1 ? b.left() : b.right();
    }
    case CTag::Split: {
      auto a = typecheck_val(ctx, m.val(0));
      if (!a.is(VKind::Prod)) bad("split of non-pair " + to_string(a));
      return typecheck_comp(ctx.extend(m.name(), a.left()).extend(m.name2(), a.right()), m.comp(0));
    }
    case CTag::IfZ: {
      expect_nat(ctx, m.val(0), "ifz scrutinee");
      auto p = typecheck_comp(ctx, m.comp(0));
      auto q = typecheck_comp(ctx, m.comp(1));
      auto u = unify(p, q);
      if (!u) bad("ifz branches differ: " + to_string(p) + " vs " + to_string(q));
      return *u;
    }
    case CTag::Calc:
      expect_nat(ctx, m.val(0), "calc operand");
      expect_nat(ctx, m.val(1), "calc operand");
      return typecheck_comp(ctx.extend(m.name(), ValType::nat()), m.comp(0));
    case CTag::Charge: return typecheck_comp(ctx, m.comp(0));
    case CTag::Fix: {
      auto b = typecheck_comp(ctx.extend(m.name(), ValType::thunk(m.ctype())), m.comp(0));
      if (!unify(b, m.ctype())) bad("fixed-point body " + to_string(b) + " does not match " + to_string(m.ctype()));
      return m.ctype();
    }
    case CTag::LCase: {
      auto l = typecheck_val(ctx, m.val(0));
      if (!l.is(VKind::List)) bad("lcase on non-list " + to_string(l));
      auto n = typecheck_comp(ctx, m.comp(0));
      auto c = typecheck_comp(ctx.extend(m.name(), l.elem()).extend(m.name2(), l), m.comp(1));
      auto u = unify(n, c);
      if (!u) bad("lcase branches differ: " + to_string(n) + " vs " + to_string(c));
      return *u;
    }
  }
  bad("unknown computation");
}

}  // namespace recx::cbpv
