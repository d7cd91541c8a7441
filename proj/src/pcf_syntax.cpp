#include "recx/pcf/syntax.hpp"

#include "recx/pcf/typecheck.hpp"

namespace recx::pcf {

namespace {

bool reserved(const std::string& a) {
  return a == "nil" || a == "nat" || a == "cost" || a == "czero" || a == "cone";
}

[[noreturn]] void fail(const std::string& msg, const SExpr& at) { throw ParseError(msg, at.loc); }

void arity(const SExpr& e, std::size_t n) {
  if (e.items.size() != n)
    fail("'" + e.items[0].atom + "' expects " + std::to_string(n - 1) + " arguments", e);
}

std::string ident(const SExpr& e) {
  if (!e.is_atom() || !is_identifier(e.atom) || reserved(e.atom)) fail("expected a variable name", e);
  return e.atom;
}

Nat numeral(const SExpr& e) {
  if (!e.is_atom() || !is_numeral(e.atom)) fail("expected a numeral", e);
  return Nat(e.atom);
}

}  // namespace

Type type_from_sexpr(const SExpr& e) {
  if (e.is_atom()) {
    if (e.atom == "nat") return Type::nat();
    if (e.atom == "cost") return Type::cost();
    if (e.atom == "?") return Type::unknown();
    fail("unknown type '" + e.atom + "'", e);
  }
  if (e.items.empty() || !e.items[0].is_atom()) fail("malformed type", e);
  const std::string& head = e.items[0].atom;
  if (head == "prod") {
    arity(e, 3);
    return Type::prod(type_from_sexpr(e.items[1]), type_from_sexpr(e.items[2]));
  }
  if (head == "->") {
    arity(e, 3);
    return Type::arrow(type_from_sexpr(e.items[1]), type_from_sexpr(e.items[2]));
  }
  if (head == "list") {
    arity(e, 2);
    return Type::list(type_from_sexpr(e.items[1]));
  }
  fail("unknown type constructor '" + head + "'", e);
}

Term term_from_sexpr(const SExpr& e) {
  if (e.is_atom()) {
    if (e.atom == "nil") return Term::nil().at(e.loc);
    if (e.atom == "czero") return Term::czero().at(e.loc);
    if (e.atom == "cone") return Term::cone().at(e.loc);
    return Term::var(ident(e), e.loc);
  }
  if (e.items.empty() || !e.items[0].is_atom()) fail("expected a term form", e);
  const std::string& head = e.items[0].atom;
  auto sub = [&](std::size_t i) { return term_from_sexpr(e.items[i]); };
  Term t;
  if (head == "num") {
    arity(e, 2);
    t = Term::num(numeral(e.items[1]));
  } else if (head == "cnum") {
    arity(e, 2);
    t = Term::cnum(numeral(e.items[1]));
  } else if (auto op = arith_from_keyword(head)) {
    arity(e, 3);
    t = Term::arith(*op, sub(1), sub(2));
  } else if (head == "ifz") {
    arity(e, 4);
    t = Term::ifz(sub(1), sub(2), sub(3));
  } else if (head == "pair") {
    arity(e, 3);
    t = Term::pair(sub(1), sub(2));
  } else if (head == "proj1" || head == "proj2") {
    arity(e, 2);
    t = Term::proj(head == "proj1" ? 1 : 2, sub(1));
  } else if (head == "lam" || head == "fix") {
    arity(e, 3);
    const SExpr& b = e.items[1];
    if (!b.is_list || b.items.size() != 2) fail("expected (name type)", b);
    std::string x = ident(b.items[0]);
    Type a = type_from_sexpr(b.items[1]);
    t = head == "lam" ? Term::lam(x, a, sub(2)) : Term::fix(x, a, sub(2));
  } else if (head == "app") {
    arity(e, 3);
    t = Term::app(sub(1), sub(2));
  } else if (head == "rec") {
    arity(e, 3);
    const SExpr& b = e.items[1];
    if (!b.is_list || b.items.size() != 4) fail("expected (f x dom cod)", b);
    t = Term::rec(ident(b.items[0]), ident(b.items[1]), type_from_sexpr(b.items[2]),
                  type_from_sexpr(b.items[3]), sub(2));
  } else if (head == "cons") {
    arity(e, 3);
    t = Term::cons(sub(1), sub(2));
  } else if (head == "lcase") {
    arity(e, 4);
    const SExpr& b = e.items[3];
    if (!b.is_list || b.items.size() != 3) fail("expected (h t body)", b);
    t = Term::lcase(sub(1), sub(2), ident(b.items[0]), ident(b.items[1]), term_from_sexpr(b.items[2]));
  } else if (head == "let") {
    arity(e, 3);
    const SExpr& b = e.items[1];
    if (!b.is_list || b.items.size() != 2) fail("expected (name term)", b);
    Term bound = term_from_sexpr(b.items[1]);
    t = Term::app(Term::lam(ident(b.items[0]), Type::unknown(), sub(2)).at(e.loc), bound);
  } else if (head == "cplus") {
    arity(e, 3);
    t = Term::cplus(sub(1), sub(2));
  } else {
    fail("unknown form '" + head + "'", e);
  }
  return t.at(e.loc);
}

SExpr to_sexpr(const Type& t) {
  switch (t.kind()) {
    case TypeKind::Nat: return SExpr::make_atom("nat");
    case TypeKind::Cost: return SExpr::make_atom("cost");
    case TypeKind::Unknown: return SExpr::make_atom("?");
    case TypeKind::Prod:
      return SExpr::make_list({SExpr::make_atom("prod"), to_sexpr(t.left()), to_sexpr(t.right())});
    case TypeKind::Arrow:
      return SExpr::make_list({SExpr::make_atom("->"), to_sexpr(t.dom()), to_sexpr(t.cod())});
    case TypeKind::List: return SExpr::make_list({SExpr::make_atom("list"), to_sexpr(t.elem())});
  }
  return SExpr::make_atom("?");
}

SExpr to_sexpr(const Term& t) {
  using S = SExpr;
  auto a = [](std::string s) { return S::make_atom(std::move(s)); };
  auto l = [](std::vector<S> v) { return S::make_list(std::move(v)); };
  auto k = [&](int i) { return to_sexpr(t.kid(i)); };
  switch (t.tag()) {
    case Tag::Var: return a(t.name());
    case Tag::Num: return l({a("num"), a(t.number().str())});
    case Tag::Arith: return l({a(std::string(arith_keyword(t.op()))), k(0), k(1)});
    case Tag::IfZ: return l({a("ifz"), k(0), k(1), k(2)});
    case Tag::Pair: return l({a("pair"), k(0), k(1)});
    case Tag::Proj: return l({a(t.index() == 1 ? "proj1" : "proj2"), k(0)});
    case Tag::Lam: return l({a("lam"), l({a(t.name()), to_sexpr(t.annot())}), k(0)});
    case Tag::App: {
      const Term& f = t.kid(0);
      if (f.is(Tag::Lam) && f.annot().is(TypeKind::Unknown))
        return l({a("let"), l({a(f.name()), k(1)}), to_sexpr(f.body())});
      return l({a("app"), k(0), k(1)});
    }
    case Tag::Fix: return l({a("fix"), l({a(t.name()), to_sexpr(t.annot())}), k(0)});
    case Tag::Rec:
      return l({a("rec"), l({a(t.name()), a(t.name2()), to_sexpr(t.annot()), to_sexpr(t.annot2())}), k(0)});
    case Tag::Nil: return a("nil");
    case Tag::Cons: return l({a("cons"), k(0), k(1)});
    case Tag::LCase: return l({a("lcase"), k(0), k(1), l({a(t.name()), a(t.name2()), k(2)})});
    case Tag::CZero: return a("czero");
    case Tag::COne: return a("cone");
    case Tag::CNum: return l({a("cnum"), a(t.number().str())});
    case Tag::CPlus: return l({a("cplus"), k(0), k(1)});
  }
  return a("?");
}

std::string print_term(const Term& t, std::size_t width) { return print_sexpr(to_sexpr(t), width); }

std::optional<Strategy> implied_strategy(const Term& t) {
  switch (t.tag()) {
    case Tag::Fix: return Strategy::CBN;
    case Tag::Rec:
    case Tag::Nil:
    case Tag::Cons:
    case Tag::LCase: return Strategy::CBV;
    default: break;
  }
  for (int i = 0; i < t.arity(); ++i)
    if (auto s = implied_strategy(t.kid(i))) return s;
  return std::nullopt;
}

Parsed parse_pcf(std::string_view text, std::optional<Strategy> forced) {
  Term raw = term_from_sexpr(read_sexpr(text));
  Strategy s = forced ? *forced : implied_strategy(raw).value_or(Strategy::CBV);
  try {
    return {elaborate({}, raw, s).term, s};
  } catch (const TypeError&) {
    return {raw, s};
  }
}

}  // namespace recx::pcf
