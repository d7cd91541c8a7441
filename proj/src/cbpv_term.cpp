#include <map>

#include "recx/cbpv/term.hpp"
#include "recx/support/names.hpp"
#include "recx/support/scope.hpp"

namespace recx::cbpv {

// ---- types ----

ValType ValType::nat() {
  static const ValType t(std::make_shared<const ValTypeNode>(ValTypeNode{VKind::Nat, {}, {}, {}}));
  return t;
}
ValType ValType::unknown() {
  static const ValType t(std::make_shared<const ValTypeNode>(ValTypeNode{VKind::Unknown, {}, {}, {}}));
  return t;
}
ValType ValType::prod(ValType a, ValType b) {
  return ValType(std::make_shared<const ValTypeNode>(ValTypeNode{VKind::Prod, std::move(a), std::move(b), {}}));
}
ValType ValType::thunk(CompType b) {
  return ValType(std::make_shared<const ValTypeNode>(ValTypeNode{VKind::U, {}, {}, std::move(b)}));
}
ValType ValType::list(ValType a) {
  return ValType(std::make_shared<const ValTypeNode>(ValTypeNode{VKind::List, std::move(a), {}, {}}));
}
VKind ValType::kind() const { return node_->kind; }
const ValType& ValType::left() const { return node_->a; }
const ValType& ValType::right() const { return node_->b; }
const CompType& ValType::comp() const { return node_->c; }

CompType CompType::free(ValType a) {
  return CompType(std::make_shared<const CompTypeNode>(CompTypeNode{CKind::F, std::move(a), {}, {}}));
}
CompType CompType::with(CompType b1, CompType b2) {
  return CompType(std::make_shared<const CompTypeNode>(CompTypeNode{CKind::With, {}, std::move(b1), std::move(b2)}));
}
CompType CompType::arrow(ValType a, CompType b) {
  return CompType(std::make_shared<const CompTypeNode>(CompTypeNode{CKind::Arrow, std::move(a), {}, std::move(b)}));
}
CKind CompType::kind() const { return node_->kind; }
const ValType& CompType::val() const { return node_->a; }
const CompType& CompType::left() const { return node_->b1; }
const CompType& CompType::right() const { return node_->b2; }

bool operator==(const ValType& a, const ValType& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_ || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case VKind::Prod: return a.left() == b.left() && a.right() == b.right();
    case VKind::List: return a.elem() == b.elem();
    case VKind::U: return a.comp() == b.comp();
    default: return true;
  }
}

bool operator==(const CompType& a, const CompType& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_ || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case CKind::F: return a.val() == b.val();
    case CKind::With: return a.left() == b.left() && a.right() == b.right();
    case CKind::Arrow: return a.val() == b.val() && a.cod() == b.cod();
  }
  return false;
}

std::optional<ValType> unify(const ValType& a, const ValType& b) {
  if (a.is(VKind::Unknown)) return b;
  if (b.is(VKind::Unknown)) return a;
  if (a.kind() != b.kind()) return std::nullopt;
  switch (a.kind()) {
    case VKind::Prod: {
      auto l = unify(a.left(), b.left());
      auto r = unify(a.right(), b.right());
      if (!l || !r) return std::nullopt;
      return ValType::prod(*l, *r);
    }
    case VKind::List: {
      auto e = unify(a.elem(), b.elem());
      if (!e) return std::nullopt;
      return ValType::list(*e);
    }
    case VKind::U: {
      auto c = unify(a.comp(), b.comp());
      if (!c) return std::nullopt;
      return ValType::thunk(*c);
    }
    default: return a;
  }
}

std::optional<CompType> unify(const CompType& a, const CompType& b) {
  if (a.kind() != b.kind()) return std::nullopt;
  switch (a.kind()) {
    case CKind::F: {
      auto v = unify(a.val(), b.val());
      if (!v) return std::nullopt;
      return CompType::free(*v);
    }
    case CKind::With: {
      auto l = unify(a.left(), b.left());
      auto r = unify(a.right(), b.right());
      if (!l || !r) return std::nullopt;
      return CompType::with(*l, *r);
    }
    case CKind::Arrow: {
      auto v = unify(a.val(), b.val());
      auto c = unify(a.cod(), b.cod());
      if (!v || !c) return std::nullopt;
      return CompType::arrow(*v, *c);
    }
  }
  return std::nullopt;
}

std::string to_string(const ValType& a) {
  switch (a.kind()) {
    case VKind::Nat: return "nat";
    case VKind::Unknown: return "?";
    case VKind::Prod: return "(prod " + to_string(a.left()) + " " + to_string(a.right()) + ")";
    case VKind::U: return "(U " + to_string(a.comp()) + ")";
    case VKind::List: return "(list " + to_string(a.elem()) + ")";
  }
  return "?";
}

std::string to_string(const CompType& b) {
  switch (b.kind()) {
    case CKind::F: return "(F " + to_string(b.val()) + ")";
    case CKind::With: return "(with " + to_string(b.left()) + " " + to_string(b.right()) + ")";
    case CKind::Arrow: return "(-> " + to_string(b.val()) + " " + to_string(b.cod()) + ")";
  }
  return "?";
}

// ---- terms ----

#define RECX_VAL(node) Value(std::make_shared<const ValueNode>(node))
#define RECX_COMP(node) Comp(std::make_shared<const CompNode>(node))

Value Value::var(std::string x) {
  ValueNode n{VTag::Var};
  n.name = std::move(x);
  return RECX_VAL(std::move(n));
}
Value Value::num(Nat k) {
  ValueNode n{VTag::Num};
  n.number = std::move(k);
  return RECX_VAL(std::move(n));
}
Value Value::pair(Value v, Value w) {
  ValueNode n{VTag::Pair};
  n.kids = {std::move(v), std::move(w)};
  return RECX_VAL(std::move(n));
}
Value Value::thunk(Comp m) {
  ValueNode n{VTag::Thunk};
  n.comp = std::move(m);
  return RECX_VAL(std::move(n));
}
Value Value::nil() {
  static const Value v = RECX_VAL(ValueNode{VTag::Nil});
  return v;
}
Value Value::cons(Value v, Value w) {
  ValueNode n{VTag::Cons};
  n.kids = {std::move(v), std::move(w)};
  return RECX_VAL(std::move(n));
}

VTag Value::tag() const { return node_->tag; }
const std::string& Value::name() const { return node_->name; }
const Nat& Value::number() const { return node_->number; }
const Value& Value::kid(int i) const { return node_->kids[i]; }
const Comp& Value::comp() const { return node_->comp; }

Value Value::rebuild(Value a, Value b) const {
  if (a.same_node(kid(0)) && b.same_node(kid(1))) return *this;
  ValueNode n = *node_;
  n.kids = {std::move(a), std::move(b)};
  return RECX_VAL(std::move(n));
}

Value Value::rebuild(Comp m) const {
  if (m.same_node(comp())) return *this;
  ValueNode n = *node_;
  n.comp = std::move(m);
  return RECX_VAL(std::move(n));
}

Comp Comp::make(CTag tag, std::array<Value, 2> vals, int nv, std::array<Comp, 2> comps, int nc) {
  CompNode n{tag};
  n.vals = std::move(vals);
  n.comps = std::move(comps);
  n.num_vals = nv;
  n.num_comps = nc;
  return RECX_COMP(std::move(n));
}

Comp Comp::ret(Value v) { return make(CTag::Return, {std::move(v), {}}, 1, {}, 0); }
Comp Comp::force(Value v) { return make(CTag::Force, {std::move(v), {}}, 1, {}, 0); }
Comp Comp::app(Comp m, Value v) { return make(CTag::App, {std::move(v), {}}, 1, {std::move(m), {}}, 1); }
Comp Comp::cpair(Comp m, Comp n) { return make(CTag::CPair, {}, 0, {std::move(m), std::move(n)}, 2); }
Comp Comp::charge(Comp m) { return make(CTag::Charge, {}, 0, {std::move(m), {}}, 1); }
Comp Comp::ifz(Value v, Comp p, Comp q) {
  return make(CTag::IfZ, {std::move(v), {}}, 1, {std::move(p), std::move(q)}, 2);
}

Comp Comp::bind(std::string x, Comp m, Comp n) {
  CompNode c{CTag::Bind};
  c.name = std::move(x);
  c.comps = {std::move(m), std::move(n)};
  c.num_comps = 2;
  return RECX_COMP(std::move(c));
}
Comp Comp::lam(std::string x, ValType a, Comp m) {
  CompNode c{CTag::Lam};
  c.name = std::move(x);
  c.vtype = std::move(a);
  c.comps = {std::move(m), {}};
  c.num_comps = 1;
  return RECX_COMP(std::move(c));
}
Comp Comp::proj(int i, Comp m) {
  CompNode c{CTag::Proj};
  c.index = i;
  c.comps = {std::move(m), {}};
  c.num_comps = 1;
  return RECX_COMP(std::move(c));
}
Comp Comp::split(Value v, std::string x1, std::string x2, Comp n) {
  CompNode c{CTag::Split};
  c.name = std::move(x1);
  c.name2 = std::move(x2);
  c.vals = {std::move(v), {}};
  c.num_vals = 1;
  c.comps = {std::move(n), {}};
  c.num_comps = 1;
  return RECX_COMP(std::move(c));
}
Comp Comp::calc(std::string v, ArithOp op, Value a, Value b, Comp n) {
  CompNode c{CTag::Calc};
  c.name = std::move(v);
  c.op = op;
  c.vals = {std::move(a), std::move(b)};
  c.num_vals = 2;
  c.comps = {std::move(n), {}};
  c.num_comps = 1;
  return RECX_COMP(std::move(c));
}
Comp Comp::fix(std::string x, CompType b, Comp m) {
  CompNode c{CTag::Fix};
  c.name = std::move(x);
  c.ctype = std::move(b);
  c.comps = {std::move(m), {}};
  c.num_comps = 1;
  return RECX_COMP(std::move(c));
}
Comp Comp::lcase(Value v, Comp nil_branch, std::string h, std::string t, Comp cons_branch) {
  CompNode c{CTag::LCase};
  c.name = std::move(h);
  c.name2 = std::move(t);
  c.vals = {std::move(v), {}};
  c.num_vals = 1;
  c.comps = {std::move(nil_branch), std::move(cons_branch)};
  c.num_comps = 2;
  return RECX_COMP(std::move(c));
}

CTag Comp::tag() const { return node_->tag; }
const std::string& Comp::name() const { return node_->name; }
const std::string& Comp::name2() const { return node_->name2; }
ArithOp Comp::op() const { return node_->op; }
int Comp::index() const { return node_->index; }
const ValType& Comp::vtype() const { return node_->vtype; }
const CompType& Comp::ctype() const { return node_->ctype; }
const Value& Comp::val(int i) const { return node_->vals[i]; }
const Comp& Comp::comp(int i) const { return node_->comps[i]; }
int Comp::num_vals() const { return node_->num_vals; }
int Comp::num_comps() const { return node_->num_comps; }

Comp Comp::rebuild(std::array<Value, 2> vals, std::array<Comp, 2> comps) const {
  bool same = true;
  for (int i = 0; i < num_vals(); ++i) same = same && vals[i].same_node(val(i));
  for (int i = 0; i < num_comps(); ++i) same = same && comps[i].same_node(comp(i));
  if (same) return *this;
  CompNode n = *node_;
  n.vals = std::move(vals);
  n.comps = std::move(comps);
  return RECX_COMP(std::move(n));
}

Comp Comp::rebuild(std::array<Value, 2> vals, std::array<Comp, 2> comps, std::string name,
                   std::string name2) const {
  if (name == this->name() && name2 == this->name2()) return rebuild(std::move(vals), std::move(comps));
  CompNode n = *node_;
  n.vals = std::move(vals);
  n.comps = std::move(comps);
  n.name = std::move(name);
  n.name2 = std::move(name2);
  return RECX_COMP(std::move(n));
}

#undef RECX_VAL
#undef RECX_COMP

std::vector<std::string> binders(const Comp& m, int i) {
  switch (m.tag()) {
    case CTag::Bind:
      if (i == 1) return {m.name()};
      return {};
    case CTag::Lam:
    case CTag::Calc:
    case CTag::Fix: return {m.name()};
    case CTag::Split: return {m.name(), m.name2()};
    case CTag::LCase:
      if (i == 1) return {m.name(), m.name2()};
      return {};
    default: return {};
  }
}

namespace {

void collect_free(const Value& v, const Scope<bool>& bound, std::set<std::string>& out);

void collect_free(const Comp& m, const Scope<bool>& bound, std::set<std::string>& out) {
  for (int i = 0; i < m.num_vals(); ++i) collect_free(m.val(i), bound, out);
  for (int i = 0; i < m.num_comps(); ++i) {
    Scope<bool> inner = bound;
    for (auto& b : binders(m, i)) inner = inner.extend(b, true);
    collect_free(m.comp(i), inner, out);
  }
}

void collect_free(const Value& v, const Scope<bool>& bound, std::set<std::string>& out) {
  switch (v.tag()) {
    case VTag::Var:
      if (!bound.find(v.name())) out.insert(v.name());
      return;
    case VTag::Pair:
    case VTag::Cons:
      collect_free(v.kid(0), bound, out);
      collect_free(v.kid(1), bound, out);
      return;
    case VTag::Thunk: collect_free(v.comp(), bound, out); return;
    default: return;
  }
}

bool occurs(const std::string& x, const Comp& m);

bool occurs(const std::string& x, const Value& v) {
  switch (v.tag()) {
    case VTag::Var: return v.name() == x;
    case VTag::Pair:
    case VTag::Cons: return occurs(x, v.kid(0)) || occurs(x, v.kid(1));
    case VTag::Thunk: return occurs(x, v.comp());
    default: return false;
  }
}

bool occurs(const std::string& x, const Comp& m) {
  for (int i = 0; i < m.num_vals(); ++i)
    if (occurs(x, m.val(i))) return true;
  for (int i = 0; i < m.num_comps(); ++i) {
    bool shadowed = false;
    for (auto& b : binders(m, i)) shadowed = shadowed || b == x;
    if (!shadowed && occurs(x, m.comp(i))) return true;
  }
  return false;
}

using Sigma = std::map<std::string, Value>;

Comp subst_c(const Comp& m, const Sigma& sigma, const std::set<std::string>& fv_vals);

Value subst_v(const Value& v, const Sigma& sigma, const std::set<std::string>& fv_vals) {
  if (sigma.empty()) return v;
  switch (v.tag()) {
    case VTag::Var: {
      auto it = sigma.find(v.name());
      return it == sigma.end() ? v : it->second;
    }
    case VTag::Pair:
    case VTag::Cons: return v.rebuild(subst_v(v.kid(0), sigma, fv_vals), subst_v(v.kid(1), sigma, fv_vals));
    case VTag::Thunk: return v.rebuild(subst_c(v.comp(), sigma, fv_vals));
    default: return v;
  }
}

Comp subst_c(const Comp& m, const Sigma& sigma, const std::set<std::string>& fv_vals) {
  if (sigma.empty()) return m;
  std::array<Value, 2> vals;
  std::array<Comp, 2> comps;
  for (int i = 0; i < m.num_vals(); ++i) vals[i] = subst_v(m.val(i), sigma, fv_vals);
  std::string name = m.name(), name2 = m.name2();
  for (int i = 0; i < m.num_comps(); ++i) {
    auto bs = binders(m, i);
    if (bs.empty()) {
      comps[i] = subst_c(m.comp(i), sigma, fv_vals);
      continue;
    }
    Sigma inner = sigma;
    for (auto& b : bs) inner.erase(b);
    bool need = false;
    for (auto& b : bs) need = need || fv_vals.count(b);
    if (need) {
      bool live = false;
      for (auto& [k, v] : inner) live = live || occurs(k, m.comp(i));
      need = live;
    }
    if (!need) {
      comps[i] = subst_c(m.comp(i), inner, fv_vals);
      continue;
    }
    std::set<std::string> avoid = free_vars(m.comp(i));
    avoid.insert(fv_vals.begin(), fv_vals.end());
    for (auto& b : bs) avoid.insert(b);
    for (auto& [k, v] : inner) avoid.insert(k);
    auto rename = [&](std::string& b) {
      if (!fv_vals.count(b)) return;
      std::string fresh = fresh_name(b, [&](const std::string& n) { return avoid.count(n) > 0; });
      avoid.insert(fresh);
      inner[b] = Value::var(fresh);
      b = fresh;
    };
    rename(name);
    if (bs.size() > 1) rename(name2);
    comps[i] = subst_c(m.comp(i), inner, fv_vals);
  }
  return m.rebuild(std::move(vals), std::move(comps), std::move(name), std::move(name2));
}

struct Alpha {
  bool val(const Value& a, const Value& b, const Scope<int>& ea, const Scope<int>& eb, int d) {
    if (a.tag() != b.tag()) return false;
    switch (a.tag()) {
      case VTag::Var: {
        const int* la = ea.find(a.name());
        const int* lb = eb.find(b.name());
        if (la || lb) return la && lb && *la == *lb;
        return a.name() == b.name();
      }
      case VTag::Num: return a.number() == b.number();
      case VTag::Pair:
      case VTag::Cons: return val(a.kid(0), b.kid(0), ea, eb, d) && val(a.kid(1), b.kid(1), ea, eb, d);
      case VTag::Thunk: return comp(a.comp(), b.comp(), ea, eb, d);
      case VTag::Nil: return true;
    }
    return false;
  }

  bool comp(const Comp& a, const Comp& b, const Scope<int>& ea, const Scope<int>& eb, int d) {
    if (a.tag() != b.tag() || a.op() != b.op() || a.index() != b.index()) return false;
    if (a.is(CTag::Lam) && a.vtype() != b.vtype()) return false;
    if (a.is(CTag::Fix) && a.ctype() != b.ctype()) return false;
    for (int i = 0; i < a.num_vals(); ++i)
      if (!val(a.val(i), b.val(i), ea, eb, d)) return false;
    for (int i = 0; i < a.num_comps(); ++i) {
      auto ba = binders(a, i), bb = binders(b, i);
      Scope<int> ia = ea, ib = eb;
      int dd = d;
      for (std::size_t j = 0; j < ba.size(); ++j, ++dd) {
        ia = ia.extend(ba[j], dd);
        ib = ib.extend(bb[j], dd);
      }
      if (!comp(a.comp(i), b.comp(i), ia, ib, dd)) return false;
    }
    return true;
  }
};

void names_v(const Value& v, std::set<std::string>& out);

void names_c(const Comp& m, std::set<std::string>& out) {
  if (!m.name().empty()) out.insert(m.name());
  if (!m.name2().empty()) out.insert(m.name2());
  for (int i = 0; i < m.num_vals(); ++i) names_v(m.val(i), out);
  for (int i = 0; i < m.num_comps(); ++i) names_c(m.comp(i), out);
}

void names_v(const Value& v, std::set<std::string>& out) {
  switch (v.tag()) {
    case VTag::Var: out.insert(v.name()); return;
    case VTag::Pair:
    case VTag::Cons:
      names_v(v.kid(0), out);
      names_v(v.kid(1), out);
      return;
    case VTag::Thunk: names_c(v.comp(), out); return;
    default: return;
  }
}

std::size_t size_v(const Value& v);

std::size_t size_c(const Comp& m) {
  std::size_t s = 1;
  for (int i = 0; i < m.num_vals(); ++i) s += size_v(m.val(i));
  for (int i = 0; i < m.num_comps(); ++i) s += size_c(m.comp(i));
  return s;
}

std::size_t size_v(const Value& v) {
  switch (v.tag()) {
    case VTag::Pair:
    case VTag::Cons: return 1 + size_v(v.kid(0)) + size_v(v.kid(1));
    case VTag::Thunk: return 1 + size_c(v.comp());
    default: return 1;
  }
}

std::set<std::string> fv_of(const ValSubst& sigma, Sigma& out) {
  std::set<std::string> fv;
  for (auto& [k, v] : sigma) {
    out[k] = v;
    auto f = free_vars(v);
    fv.insert(f.begin(), f.end());
  }
  return fv;
}

}  // namespace

std::set<std::string> free_vars(const Value& v) {
  std::set<std::string> out;
  collect_free(v, {}, out);
  return out;
}

std::set<std::string> free_vars(const Comp& m) {
  std::set<std::string> out;
  collect_free(m, {}, out);
  return out;
}

std::set<std::string> all_names(const Comp& m) {
  std::set<std::string> out;
  names_c(m, out);
  return out;
}

Value subst(const Value& v, const ValSubst& sigma) {
  Sigma s;
  auto fv = fv_of(sigma, s);
  return subst_v(v, s, fv);
}

Comp subst(const Comp& m, const ValSubst& sigma) {
  Sigma s;
  auto fv = fv_of(sigma, s);
  return subst_c(m, s, fv);
}

Comp subst(const Comp& m, const std::string& x, const Value& v) { return subst(m, ValSubst{{x, v}}); }

bool alpha_equal(const Value& a, const Value& b) { return Alpha{}.val(a, b, {}, {}, 0); }
bool alpha_equal(const Comp& a, const Comp& b) { return Alpha{}.comp(a, b, {}, {}, 0); }

bool is_terminal(const Comp& m) { return m.is(CTag::Return) || m.is(CTag::CPair) || m.is(CTag::Lam); }

std::size_t size(const Comp& m) { return size_c(m); }

}  // namespace recx::cbpv

namespace recx::cbpv {

Value scale_charges(const Value& v, unsigned k) {
  switch (v.tag()) {
    case VTag::Pair:
    case VTag::Cons: return v.rebuild(scale_charges(v.kid(0), k), scale_charges(v.kid(1), k));
    case VTag::Thunk: return v.rebuild(scale_charges(v.comp(), k));
    default: return v;
  }
}

Comp scale_charges(const Comp& m, unsigned k) {
  std::array<Value, 2> vals;
  std::array<Comp, 2> comps;
  for (int i = 0; i < m.num_vals(); ++i) vals[i] = scale_charges(m.val(i), k);
  for (int i = 0; i < m.num_comps(); ++i) comps[i] = scale_charges(m.comp(i), k);
  if (!m.is(CTag::Charge)) return m.rebuild(std::move(vals), std::move(comps));
  Comp inner = comps[0];
  for (unsigned i = 0; i < k; ++i) inner = Comp::charge(inner);
  return inner;
}

}  // namespace recx::cbpv
