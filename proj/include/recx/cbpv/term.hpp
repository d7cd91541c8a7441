#pragma once

#include <array>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "recx/arith.hpp"
#include "recx/cbpv/type.hpp"
#include "recx/support/nat.hpp"

namespace recx::cbpv {

enum class VTag { Var, Num, Pair, Thunk, Nil, Cons };

enum class CTag { Return, Bind, Force, Lam, App, CPair, Proj, Split, IfZ, Calc, Charge, Fix, LCase };

struct ValueNode;
struct CompNode;
class Comp;

class Value {
 public:
  Value() = default;
  static Value var(std::string x);
  static Value num(Nat k);
  static Value pair(Value v, Value w);
  static Value thunk(Comp m);
  static Value nil();
  static Value cons(Value v, Value w);

  explicit operator bool() const { return static_cast<bool>(node_); }
  VTag tag() const;
  bool is(VTag t) const { return node_ && tag() == t; }
  const std::string& name() const;
  const Nat& number() const;
  const Value& kid(int i) const;  // Pair, Cons
  const Comp& comp() const;       // Thunk

  Value rebuild(Value a, Value b) const;
  Value rebuild(Comp m) const;
  bool same_node(const Value& o) const { return node_ == o.node_; }

 private:
  explicit Value(std::shared_ptr<const ValueNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ValueNode> node_;
};

// Computation terms. Layout by tag:
//   Return(V), Force(V): val(0)
//   Bind: comp(0) then comp(1) binding name()
//   Lam: comp(0) binding name() : vtype()
//   App: comp(0) applied to val(0)
//   CPair: comp(0), comp(1); Proj: comp(0), index()
//   Split: val(0), comp(0) binding name() and name2()
//   IfZ: val(0), comp(0) zero branch, comp(1) successor branch
//   Calc: name() = op(val(0), val(1)) in comp(0)
//   Charge: comp(0)
//   Fix: comp(0) binding name() : U ctype()
//   LCase: val(0), comp(0) nil branch, comp(1) binding name() and name2()
class Comp {
 public:
  Comp() = default;
  static Comp ret(Value v);
  static Comp bind(std::string x, Comp m, Comp n);
  static Comp force(Value v);
  static Comp lam(std::string x, ValType a, Comp m);
  static Comp app(Comp m, Value v);
  static Comp cpair(Comp m, Comp n);
  static Comp proj(int i, Comp m);
  static Comp split(Value v, std::string x1, std::string x2, Comp n);
  static Comp ifz(Value v, Comp p, Comp q);
  static Comp calc(std::string v, ArithOp op, Value a, Value b, Comp n);
  static Comp charge(Comp m);
  static Comp fix(std::string x, CompType b, Comp m);
  static Comp lcase(Value v, Comp nil_branch, std::string h, std::string t, Comp cons_branch);

  explicit operator bool() const { return static_cast<bool>(node_); }
  CTag tag() const;
  bool is(CTag t) const { return node_ && tag() == t; }
  const std::string& name() const;
  const std::string& name2() const;
  ArithOp op() const;
  int index() const;
  const ValType& vtype() const;
  const CompType& ctype() const;
  const Value& val(int i) const;
  const Comp& comp(int i) const;
  int num_vals() const;
  int num_comps() const;

  Comp rebuild(std::array<Value, 2> vals, std::array<Comp, 2> comps) const;
  Comp rebuild(std::array<Value, 2> vals, std::array<Comp, 2> comps, std::string name, std::string name2) const;
  bool same_node(const Comp& o) const { return node_ == o.node_; }

 private:
  explicit Comp(std::shared_ptr<const CompNode> n) : node_(std::move(n)) {}
  static Comp make(CTag tag, std::array<Value, 2> vals, int nv, std::array<Comp, 2> comps, int nc);
  std::shared_ptr<const CompNode> node_;
};

struct ValueNode {
  VTag tag;
  std::string name;
  Nat number;
  std::array<Value, 2> kids;
  Comp comp;
};

struct CompNode {
  CTag tag;
  std::string name;
  std::string name2;
  ArithOp op = ArithOp::Add;
  int index = 0;
  ValType vtype;
  CompType ctype;
  std::array<Value, 2> vals;
  std::array<Comp, 2> comps;
  int num_vals = 0;
  int num_comps = 0;
};

// Variables bound by m over comp(i).
std::vector<std::string> binders(const Comp& m, int i);

std::set<std::string> free_vars(const Value& v);
std::set<std::string> free_vars(const Comp& m);
std::set<std::string> all_names(const Comp& m);

using ValSubst = std::vector<std::pair<std::string, Value>>;
Value subst(const Value& v, const ValSubst& sigma);
Comp subst(const Comp& m, const ValSubst& sigma);
Comp subst(const Comp& m, const std::string& x, const Value& v);

bool alpha_equal(const Value& a, const Value& b);
bool alpha_equal(const Comp& a, const Comp& b);

// Return, CPair and Lam.
bool is_terminal(const Comp& m);

// Size in nodes, for tests and diagnostics.
std::size_t size(const Comp& m);

}  // namespace recx::cbpv

namespace recx::cbpv {

// Replaces every charge M by k nested charges; k = 0 erases them.
Comp scale_charges(const Comp& m, unsigned k);
Value scale_charges(const Value& v, unsigned k);

}  // namespace recx::cbpv
