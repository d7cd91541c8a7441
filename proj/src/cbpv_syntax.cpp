#include "recx/cbpv/syntax.hpp"

#include "recx/support/errors.hpp"

namespace recx::cbpv {

namespace {

bool is_comp_head(const std::string& h) {
  return h == "return" || h == "bind" || h == "force" || h == "lam" || h == "app" || h == "cpair" ||
         h == "cproj1" || h == "cproj2" || h == "split" || h == "ifz" || h == "calc" || h == "charge" ||
         h == "cfix" || h == "lcase";
}

bool is_value_head(const std::string& h) { return h == "num" || h == "pair" || h == "thunk" || h == "cons"; }

[[noreturn]] void fail(const std::string& msg, const SExpr& at) { throw ParseError(msg, at.loc); }

void arity(const SExpr& e, std::size_t n) {
  if (e.items.size() != n)
    fail("'" + e.items[0].atom + "' expects " + std::to_string(n - 1) + " arguments", e);
}

std::string ident(const SExpr& e) {
  if (!e.is_atom() || !is_identifier(e.atom) || e.atom == "nil" || e.atom == "nat")
    fail("expected a variable name", e);
  return e.atom;
}

const std::string& head_of(const SExpr& e) {
  if (e.items.empty() || !e.items[0].is_atom()) fail("expected a form", e);
  return e.items[0].atom;
}

}  // namespace

ValType valtype_from_sexpr(const SExpr& e) {
  if (e.is_atom()) {
    if (e.atom == "nat") return ValType::nat();
    if (e.atom == "?") return ValType::unknown();
    fail("unknown value type '" + e.atom + "'", e);
  }
  const std::string& h = head_of(e);
  if (h == "prod") {
    arity(e, 3);
    return ValType::prod(valtype_from_sexpr(e.items[1]), valtype_from_sexpr(e.items[2]));
  }
  if (h == "U") {
    arity(e, 2);
    return ValType::thunk(comptype_from_sexpr(e.items[1]));
  }
  if (h == "list") {
    arity(e, 2);
    return ValType::list(valtype_from_sexpr(e.items[1]));
  }
  if (h == "F" || h == "with" || h == "->")
    throw PolarityError("computation type where a value type belongs", e.loc);
  fail("unknown value type '" + h + "'", e);
}

CompType comptype_from_sexpr(const SExpr& e) {
  if (e.is_atom()) {
    if (e.atom == "nat") throw PolarityError("value type where a computation type belongs", e.loc);
    fail("unknown computation type '" + e.atom + "'", e);
  }
  const std::string& h = head_of(e);
  if (h == "F") {
    arity(e, 2);
    return CompType::free(valtype_from_sexpr(e.items[1]));
  }
  if (h == "with") {
    arity(e, 3);
    return CompType::with(comptype_from_sexpr(e.items[1]), comptype_from_sexpr(e.items[2]));
  }
  if (h == "->") {
    arity(e, 3);
    return CompType::arrow(valtype_from_sexpr(e.items[1]), comptype_from_sexpr(e.items[2]));
  }
  if (h == "prod" || h == "U" || h == "list")
    throw PolarityError("value type where a computation type belongs", e.loc);
  fail("unknown computation type '" + h + "'", e);
}

Value value_from_sexpr(const SExpr& e) {
  if (e.is_atom()) {
    if (e.atom == "nil") return Value::nil();
    return Value::var(ident(e));
  }
  const std::string& h = head_of(e);
  if (h == "num") {
    arity(e, 2);
    if (!e.items[1].is_atom() || !is_numeral(e.items[1].atom)) fail("expected a numeral", e.items[1]);
    return Value::num(Nat(e.items[1].atom));
  }
  if (h == "pair" || h == "cons") {
    arity(e, 3);
    Value a = value_from_sexpr(e.items[1]), b = value_from_sexpr(e.items[2]);
    return h == "pair" ? Value::pair(a, b) : Value::cons(a, b);
  }
  if (h == "thunk") {
    arity(e, 2);
    return Value::thunk(comp_from_sexpr(e.items[1]));
  }
  if (is_comp_head(h)) throw PolarityError("computation '" + h + "' where a value belongs", e.loc);
  fail("unknown value form '" + h + "'", e);
}

Comp comp_from_sexpr(const SExpr& e) {
  if (e.is_atom()) throw PolarityError("value '" + e.atom + "' where a computation belongs", e.loc);
  const std::string& h = head_of(e);
  auto v = [&](std::size_t i) { return value_from_sexpr(e.items[i]); };
  auto c = [&](std::size_t i) { return comp_from_sexpr(e.items[i]); };
  auto binder = [&](std::size_t i, std::size_t n) -> const SExpr& {
    const SExpr& b = e.items[i];
    if (!b.is_list || b.items.size() != n) fail("malformed binder", b);
    return b;
  };
  if (h == "return" || h == "force") {
    arity(e, 2);
    return h == "return" ? Comp::ret(v(1)) : Comp::force(v(1));
  }
  if (h == "bind") {
    arity(e, 3);
    const SExpr& b = binder(1, 2);
    return Comp::bind(ident(b.items[0]), comp_from_sexpr(b.items[1]), c(2));
  }
  if (h == "lam") {
    arity(e, 3);
    const SExpr& b = binder(1, 2);
    return Comp::lam(ident(b.items[0]), valtype_from_sexpr(b.items[1]), c(2));
  }
  if (h == "app") {
    arity(e, 3);
    return Comp::app(c(1), v(2));
  }
  if (h == "cpair") {
    arity(e, 3);
    return Comp::cpair(c(1), c(2));
  }
  if (h == "cproj1" || h == "cproj2") {
    arity(e, 2);
    return Comp::proj(h == "cproj1" ? 1 : 2, c(1));
  }
  if (h == "split") {
    arity(e, 4);
    const SExpr& b = binder(2, 2);
    return Comp::split(v(1), ident(b.items[0]), ident(b.items[1]), c(3));
  }
  if (h == "ifz") {
    arity(e, 4);
    return Comp::ifz(v(1), c(2), c(3));
  }
  if (h == "calc") {
    arity(e, 3);
    const SExpr& b = binder(1, 2);
    const SExpr& rhs = b.items[1];
    if (!rhs.is_list || rhs.items.size() != 3 || !rhs.items[0].is_atom()) fail("expected (op V W)", rhs);
    auto op = arith_from_keyword(rhs.items[0].atom);
    if (!op) fail("unknown operator '" + rhs.items[0].atom + "'", rhs);
    return Comp::calc(ident(b.items[0]), *op, value_from_sexpr(rhs.items[1]), value_from_sexpr(rhs.items[2]), c(2));
  }
  if (h == "charge") {
    arity(e, 2);
    return Comp::charge(c(1));
  }
  if (h == "cfix") {
    arity(e, 3);
    const SExpr& b = binder(1, 2);
    return Comp::fix(ident(b.items[0]), comptype_from_sexpr(b.items[1]), c(2));
  }
  if (h == "lcase") {
    arity(e, 4);
    const SExpr& b = binder(3, 3);
    return Comp::lcase(v(1), c(2), ident(b.items[0]), ident(b.items[1]), comp_from_sexpr(b.items[2]));
  }
  if (is_value_head(h)) throw PolarityError("value '" + h + "' where a computation belongs", e.loc);
  fail("unknown computation form '" + h + "'", e);
}

Comp parse_comp(std::string_view text) { return comp_from_sexpr(read_sexpr(text)); }
Value parse_value(std::string_view text) { return value_from_sexpr(read_sexpr(text)); }

namespace {
SExpr atom(std::string s) { return SExpr::make_atom(std::move(s)); }
SExpr list(std::vector<SExpr> v) { return SExpr::make_list(std::move(v)); }
}  // namespace

SExpr to_sexpr(const ValType& a) {
  switch (a.kind()) {
    case VKind::Nat: return atom("nat");
    case VKind::Unknown: return atom("?");
    case VKind::Prod: return list({atom("prod"), to_sexpr(a.left()), to_sexpr(a.right())});
    case VKind::U: return list({atom("U"), to_sexpr(a.comp())});
    case VKind::List: return list({atom("list"), to_sexpr(a.elem())});
  }
  return atom("?");
}

SExpr to_sexpr(const CompType& b) {
  switch (b.kind()) {
    case CKind::F: return list({atom("F"), to_sexpr(b.val())});
    case CKind::With: return list({atom("with"), to_sexpr(b.left()), to_sexpr(b.right())});
    case CKind::Arrow: return list({atom("->"), to_sexpr(b.val()), to_sexpr(b.cod())});
  }
  return atom("?");
}

SExpr to_sexpr(const Value& v) {
  switch (v.tag()) {
    case VTag::Var: return atom(v.name());
    case VTag::Num: return list({atom("num"), atom(v.number().str())});
    case VTag::Pair: return list({atom("pair"), to_sexpr(v.kid(0)), to_sexpr(v.kid(1))});
    case VTag::Thunk: return list({atom("thunk"), to_sexpr(v.comp())});
    case VTag::Nil: return atom("nil");
    case VTag::Cons: return list({atom("cons"), to_sexpr(v.kid(0)), to_sexpr(v.kid(1))});
  }
  return atom("?");
}

SExpr to_sexpr(const Comp& m) {
  auto v = [&](int i) { return to_sexpr(m.val(i)); };
  auto c = [&](int i) { return to_sexpr(m.comp(i)); };
  switch (m.tag()) {
    case CTag::Return: return list({atom("return"), v(0)});
    case CTag::Bind: return list({atom("bind"), list({atom(m.name()), c(0)}), c(1)});
    case CTag::Force: return list({atom("force"), v(0)});
    case CTag::Lam: return list({atom("lam"), list({atom(m.name()), to_sexpr(m.vtype())}), c(0)});
    case CTag::App: return list({atom("app"), c(0), v(0)});
    case CTag::CPair: return list({atom("cpair"), c(0), c(1)});
    case CTag::Proj: return list({atom(m.index() == 1 ? "cproj1" : "cproj2"), c(0)});
    case CTag::Split: return list({atom("split"), v(0), list({atom(m.name()), atom(m.name2())}), c(0)});
    case CTag::IfZ: return list({atom("ifz"), v(0), c(0), c(1)});
    case CTag::Calc:
      return list({atom("calc"), list({atom(m.name()), list({atom(std::string(arith_keyword(m.op()))), v(0), v(1)})}),
                   c(0)});
    case CTag::Charge: return list({atom("charge"), c(0)});
    case CTag::Fix: return list({atom("cfix"), list({atom(m.name()), to_sexpr(m.ctype())}), c(0)});
    case CTag::LCase: return list({atom("lcase"), v(0), c(0), list({atom(m.name()), atom(m.name2()), c(1)})});
  }
  return atom("?");
}

std::string print(const Value& v, std::size_t width) { return print_sexpr(to_sexpr(v), width); }
std::string print(const Comp& m, std::size_t width) { return print_sexpr(to_sexpr(m), width); }

}  // namespace recx::cbpv
