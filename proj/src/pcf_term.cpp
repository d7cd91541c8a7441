#include <functional>
#include <map>

#include "recx/pcf/term.hpp"
#include "recx/support/names.hpp"
#include "recx/support/scope.hpp"

namespace recx::pcf {

// ---- types ----

Type Type::nat() {
  static const Type t(std::make_shared<const TypeNode>(TypeNode{TypeKind::Nat, {}, {}}));
  return t;
}
Type Type::cost() {
  static const Type t(std::make_shared<const TypeNode>(TypeNode{TypeKind::Cost, {}, {}}));
  return t;
}
Type Type::unknown() {
  static const Type t(std::make_shared<const TypeNode>(TypeNode{TypeKind::Unknown, {}, {}}));
  return t;
}
Type Type::prod(Type l, Type r) {
  return Type(std::make_shared<const TypeNode>(TypeNode{TypeKind::Prod, std::move(l), std::move(r)}));
}
Type Type::arrow(Type d, Type c) {
  return Type(std::make_shared<const TypeNode>(TypeNode{TypeKind::Arrow, std::move(d), std::move(c)}));
}
Type Type::list(Type e) {
  return Type(std::make_shared<const TypeNode>(TypeNode{TypeKind::List, std::move(e), {}}));
}

TypeKind Type::kind() const { return node_->kind; }
const Type& Type::left() const { return node_->a; }
const Type& Type::right() const { return node_->b; }

bool Type::has_unknown() const {
  switch (kind()) {
    case TypeKind::Unknown: return true;
    case TypeKind::Prod:
    case TypeKind::Arrow: return left().has_unknown() || right().has_unknown();
    case TypeKind::List: return elem().has_unknown();
    default: return false;
  }
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_ || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TypeKind::Prod:
    case TypeKind::Arrow: return a.left() == b.left() && a.right() == b.right();
    case TypeKind::List: return a.elem() == b.elem();
    default: return true;
  }
}

std::optional<Type> unify(const Type& a, const Type& b) {
  if (a.is(TypeKind::Unknown)) return b;
  if (b.is(TypeKind::Unknown)) return a;
  if (a.kind() != b.kind()) return std::nullopt;
  switch (a.kind()) {
    case TypeKind::Prod:
    case TypeKind::Arrow: {
      auto l = unify(a.left(), b.left());
      auto r = unify(a.right(), b.right());
      if (!l || !r) return std::nullopt;
      return a.is(TypeKind::Prod) ? Type::prod(*l, *r) : Type::arrow(*l, *r);
    }
    case TypeKind::List: {
      auto e = unify(a.elem(), b.elem());
      if (!e) return std::nullopt;
      return Type::list(*e);
    }
    default: return a;
  }
}

std::string to_string(const Type& t) {
  switch (t.kind()) {
    case TypeKind::Nat: return "nat";
    case TypeKind::Cost: return "cost";
    case TypeKind::Unknown: return "?";
    case TypeKind::Prod: return "(prod " + to_string(t.left()) + " " + to_string(t.right()) + ")";
    case TypeKind::Arrow: return "(-> " + to_string(t.dom()) + " " + to_string(t.cod()) + ")";
    case TypeKind::List: return "(list " + to_string(t.elem()) + ")";
  }
  return "?";
}

std::string_view to_string(Strategy s) { return s == Strategy::CBV ? "cbv" : "cbn"; }

// ---- terms ----

#define RECX_MAKE(node) Term(std::make_shared<const TermNode>(node))

Term Term::var(std::string x, SourceLoc loc) {
  TermNode n{Tag::Var};
  n.name = std::move(x);
  n.loc = loc;
  return RECX_MAKE(std::move(n));
}
Term Term::num(Nat k) {
  TermNode n{Tag::Num};
  n.number = std::move(k);
  return RECX_MAKE(std::move(n));
}
Term Term::arith(ArithOp op, Term m, Term k) {
  TermNode n{Tag::Arith};
  n.op = op;
  n.kids = {std::move(m), std::move(k), {}};
  n.arity = 2;
  return RECX_MAKE(std::move(n));
}
Term Term::ifz(Term c, Term z, Term s) {
  TermNode n{Tag::IfZ};
  n.kids = {std::move(c), std::move(z), std::move(s)};
  n.arity = 3;
  return RECX_MAKE(std::move(n));
}
Term Term::pair(Term a, Term b) {
  TermNode n{Tag::Pair};
  n.kids = {std::move(a), std::move(b), {}};
  n.arity = 2;
  return RECX_MAKE(std::move(n));
}
Term Term::proj(int i, Term m) {
  TermNode n{Tag::Proj};
  n.index = i;
  n.kids = {std::move(m), {}, {}};
  n.arity = 1;
  return RECX_MAKE(std::move(n));
}
Term Term::lam(std::string x, Type a, Term body) {
  TermNode n{Tag::Lam};
  n.name = std::move(x);
  n.annot = std::move(a);
  n.kids = {std::move(body), {}, {}};
  n.arity = 1;
  return RECX_MAKE(std::move(n));
}
Term Term::app(Term f, Term a) {
  TermNode n{Tag::App};
  n.kids = {std::move(f), std::move(a), {}};
  n.arity = 2;
  return RECX_MAKE(std::move(n));
}
Term Term::fix(std::string x, Type a, Term body) {
  TermNode n{Tag::Fix};
  n.name = std::move(x);
  n.annot = std::move(a);
  n.kids = {std::move(body), {}, {}};
  n.arity = 1;
  return RECX_MAKE(std::move(n));
}
Term Term::rec(std::string f, std::string x, Type dom, Type cod, Term body) {
  TermNode n{Tag::Rec};
  n.name = std::move(f);
  n.name2 = std::move(x);
  n.annot = std::move(dom);
  n.annot2 = std::move(cod);
  n.kids = {std::move(body), {}, {}};
  n.arity = 1;
  return RECX_MAKE(std::move(n));
}
Term Term::nil() {
  static const Term t = RECX_MAKE(TermNode{Tag::Nil});
  return t;
}
Term Term::cons(Term h, Term t) {
  TermNode n{Tag::Cons};
  n.kids = {std::move(h), std::move(t), {}};
  n.arity = 2;
  return RECX_MAKE(std::move(n));
}
Term Term::lcase(Term scrut, Term nil_branch, std::string h, std::string t, Term cons_branch) {
  TermNode n{Tag::LCase};
  n.name = std::move(h);
  n.name2 = std::move(t);
  n.kids = {std::move(scrut), std::move(nil_branch), std::move(cons_branch)};
  n.arity = 3;
  return RECX_MAKE(std::move(n));
}
Term Term::czero() {
  static const Term t = RECX_MAKE(TermNode{Tag::CZero});
  return t;
}
Term Term::cone() {
  static const Term t = RECX_MAKE(TermNode{Tag::COne});
  return t;
}
Term Term::cnum(Nat k) {
  TermNode n{Tag::CNum};
  n.number = std::move(k);
  return RECX_MAKE(std::move(n));
}
Term Term::cplus(Term a, Term b) {
  TermNode n{Tag::CPlus};
  n.kids = {std::move(a), std::move(b), {}};
  n.arity = 2;
  return RECX_MAKE(std::move(n));
}

Tag Term::tag() const { return node_->tag; }
const std::string& Term::name() const { return node_->name; }
const std::string& Term::name2() const { return node_->name2; }
const Nat& Term::number() const { return node_->number; }
ArithOp Term::op() const { return node_->op; }
int Term::index() const { return node_->index; }
const Type& Term::annot() const { return node_->annot; }
const Type& Term::annot2() const { return node_->annot2; }
const Term& Term::kid(int i) const { return node_->kids[i]; }
int Term::arity() const { return node_->arity; }
SourceLoc Term::loc() const { return node_->loc; }

Term Term::at(SourceLoc loc) const {
  TermNode n = *node_;
  n.loc = loc;
  return RECX_MAKE(std::move(n));
}

Term Term::rebuild(std::array<Term, 3> kids) const {
  bool same = true;
  for (int i = 0; i < arity(); ++i) same = same && kids[i].same_node(kid(i));
  if (same) return *this;
  TermNode n = *node_;
  n.kids = std::move(kids);
  return RECX_MAKE(std::move(n));
}

Term Term::rebuild(std::array<Term, 3> kids, std::string name, std::string name2) const {
  if (name == this->name() && name2 == this->name2()) return rebuild(std::move(kids));
  TermNode n = *node_;
  n.kids = std::move(kids);
  n.name = std::move(name);
  n.name2 = std::move(name2);
  return RECX_MAKE(std::move(n));
}

Term Term::with_annot(Type a) const {
  TermNode n = *node_;
  n.annot = std::move(a);
  return RECX_MAKE(std::move(n));
}

std::size_t Term::size() const {
  std::size_t s = 1;
  for (int i = 0; i < arity(); ++i) s += kid(i).size();
  return s;
}

#undef RECX_MAKE

std::vector<std::string> binders(const Term& t, int i) {
  switch (t.tag()) {
    case Tag::Lam:
    case Tag::Fix: return {t.name()};
    case Tag::Rec: return {t.name(), t.name2()};
    case Tag::LCase:
      if (i == 2) return {t.name(), t.name2()};
      return {};
    default: return {};
  }
}

namespace {

void collect_free(const Term& t, Scope<bool> bound, std::set<std::string>& out) {
  if (t.is(Tag::Var)) {
    if (!bound.find(t.name())) out.insert(t.name());
    return;
  }
  for (int i = 0; i < t.arity(); ++i) {
    Scope<bool> inner = bound;
    for (auto& b : binders(t, i)) inner = inner.extend(b, true);
    collect_free(t.kid(i), inner, out);
  }
}

std::size_t count_free_in(const std::string& x, const Term& t) {
  if (t.is(Tag::Var)) return t.name() == x ? 1 : 0;
  std::size_t n = 0;
  for (int i = 0; i < t.arity(); ++i) {
    bool shadowed = false;
    for (auto& b : binders(t, i)) shadowed = shadowed || b == x;
    if (!shadowed) n += count_free_in(x, t.kid(i));
  }
  return n;
}

bool occurs_in(const std::string& x, const Term& t) {
  if (t.is(Tag::Var)) return t.name() == x;
  for (int i = 0; i < t.arity(); ++i) {
    bool shadowed = false;
    for (auto& b : binders(t, i)) shadowed = shadowed || b == x;
    if (!shadowed && occurs_in(x, t.kid(i))) return true;
  }
  return false;
}

using Sigma = std::map<std::string, Term>;

Term subst_rec(const Term& t, const Sigma& sigma, const std::set<std::string>& fv_vals) {
  if (sigma.empty()) return t;
  if (t.is(Tag::Var)) {
    auto it = sigma.find(t.name());
    return it == sigma.end() ? t : it->second;
  }
  if (t.arity() == 0) return t;
  std::array<Term, 3> kids;
  std::string name = t.name(), name2 = t.name2();
  for (int i = 0; i < t.arity(); ++i) {
    auto bs = binders(t, i);
    if (bs.empty()) {
      kids[i] = subst_rec(t.kid(i), sigma, fv_vals);
      continue;
    }
    Sigma inner = sigma;
    for (auto& b : bs) inner.erase(b);
    bool need = false;
    for (auto& b : bs) need = need || fv_vals.count(b);
    if (need) {
      bool live = false;
      for (auto& [k, v] : inner) live = live || occurs_in(k, t.kid(i));
      need = live;
    }
    if (!need) {
      kids[i] = subst_rec(t.kid(i), inner, fv_vals);
      continue;
    }
    // Rename any binder that a substituted value would otherwise capture.
    std::set<std::string> avoid = free_vars(t.kid(i));
    avoid.insert(fv_vals.begin(), fv_vals.end());
    for (auto& b : bs) avoid.insert(b);
    for (auto& [k, v] : inner) avoid.insert(k);
    auto rename = [&](std::string& b) {
      if (!fv_vals.count(b)) return;
      std::string fresh = fresh_name(b, [&](const std::string& n) { return avoid.count(n) > 0; });
      avoid.insert(fresh);
      inner[b] = Term::var(fresh);
      b = fresh;
    };
    if (t.is(Tag::Lam) || t.is(Tag::Fix)) {
      rename(name);
    } else {
      rename(name);
      rename(name2);
    }
    kids[i] = subst_rec(t.kid(i), inner, fv_vals);
  }
  return t.rebuild(std::move(kids), std::move(name), std::move(name2));
}

bool alpha_rec(const Term& a, const Term& b, const Scope<int>& ea, const Scope<int>& eb, int depth) {
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Tag::Var: {
      const int* la = ea.find(a.name());
      const int* lb = eb.find(b.name());
      if (la || lb) return la && lb && *la == *lb;
      return a.name() == b.name();
    }
    case Tag::Num:
    case Tag::CNum: return a.number() == b.number();
    case Tag::Arith:
      if (a.op() != b.op()) return false;
      break;
    case Tag::Proj:
      if (a.index() != b.index()) return false;
      break;
    case Tag::Lam:
    case Tag::Fix:
      if (a.annot() != b.annot()) return false;
      break;
    case Tag::Rec:
      if (a.annot() != b.annot() || a.annot2() != b.annot2()) return false;
      break;
    default: break;
  }
  for (int i = 0; i < a.arity(); ++i) {
    auto ba = binders(a, i), bb = binders(b, i);
    Scope<int> ia = ea, ib = eb;
    int d = depth;
    for (std::size_t j = 0; j < ba.size(); ++j) {
      ia = ia.extend(ba[j], d);
      ib = ib.extend(bb[j], d);
      ++d;
    }
    if (!alpha_rec(a.kid(i), b.kid(i), ia, ib, d)) return false;
  }
  return true;
}

void collect_names(const Term& t, std::set<std::string>& out) {
  if (t.is(Tag::Var)) out.insert(t.name());
  if (!t.name().empty()) out.insert(t.name());
  if (!t.name2().empty()) out.insert(t.name2());
  for (int i = 0; i < t.arity(); ++i) collect_names(t.kid(i), out);
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_free(t, {}, out);
  return out;
}

bool occurs_free(const std::string& x, const Term& t) { return occurs_in(x, t); }

std::size_t count_free(const std::string& x, const Term& t) { return count_free_in(x, t); }

std::set<std::string> all_names(const Term& t) {
  std::set<std::string> out;
  collect_names(t, out);
  return out;
}

Term subst(const Term& t, const std::string& x, const Term& v) { return subst(t, {{x, v}}); }

Term subst(const Term& t, const std::vector<std::pair<std::string, Term>>& sigma) {
  Sigma s;
  std::set<std::string> fv;
  for (auto& [k, v] : sigma) {
    s[k] = v;
    auto f = free_vars(v);
    fv.insert(f.begin(), f.end());
  }
  return subst_rec(t, s, fv);
}

bool alpha_equal(const Term& a, const Term& b) { return alpha_rec(a, b, {}, {}, 0); }

bool is_cbv_value(const Term& t) {
  switch (t.tag()) {
    case Tag::Num:
    case Tag::Var:
    case Tag::Lam:
    case Tag::Rec:
    case Tag::Nil: return true;
    case Tag::Pair:
    case Tag::Cons: return is_cbv_value(t.kid(0)) && is_cbv_value(t.kid(1));
    default: return false;
  }
}

}  // namespace recx::pcf
