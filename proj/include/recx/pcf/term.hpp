#pragma once

#include <array>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "recx/arith.hpp"
#include "recx/pcf/type.hpp"
#include "recx/support/errors.hpp"
#include "recx/support/nat.hpp"

namespace recx::pcf {

enum class Strategy { CBV, CBN };

std::string_view to_string(Strategy s);

enum class Tag {
  Var,
  Num,
  Arith,
  IfZ,
  Pair,
  Proj,
  Lam,
  App,
  Fix,  // CBN fixed point at any type
  Rec,  // CBV recursive function
  Nil,
  Cons,
  LCase,
  // Recurrence language additions.
  CZero,
  COne,
  CNum,  // compact numc(k)
  CPlus,
};

struct TermNode;

// Immutable term handle. PCF and PCFc share this representation; the two
// typecheckers decide which constructors are admissible.
//
// Child layout by tag:
//   Arith, Pair, App, Cons, CPlus: kid(0), kid(1)
//   IfZ: scrutinee, zero branch, successor branch
//   Proj: kid(0), index() is 1 or 2
//   Lam, Fix: body kid(0) binding name()
//   Rec: body kid(0) binding name() (the function) and name2() (argument)
//   LCase: scrutinee, nil branch, cons branch binding name() and name2()
class Term {
 public:
  Term() = default;

  static Term var(std::string x, SourceLoc loc = {});
  static Term num(Nat k);
  static Term arith(ArithOp op, Term m, Term n);
  static Term ifz(Term n, Term zero, Term succ);
  static Term pair(Term m, Term n);
  static Term proj(int i, Term m);
  static Term lam(std::string x, Type annot, Term body);
  static Term app(Term m, Term n);
  static Term fix(std::string x, Type annot, Term body);
  static Term rec(std::string f, std::string x, Type dom, Type cod, Term body);
  static Term nil();
  static Term cons(Term head, Term tail);
  static Term lcase(Term scrut, Term nil_branch, std::string h, std::string t, Term cons_branch);
  static Term czero();
  static Term cone();
  static Term cnum(Nat k);
  static Term cplus(Term m, Term n);

  explicit operator bool() const { return static_cast<bool>(node_); }
  Tag tag() const;
  bool is(Tag t) const { return node_ && tag() == t; }

  const std::string& name() const;
  const std::string& name2() const;
  const Nat& number() const;
  ArithOp op() const;
  int index() const;
  const Type& annot() const;   // Lam, Fix annotation; Rec domain
  const Type& annot2() const;  // Rec codomain
  const Term& kid(int i) const;
  int arity() const;
  SourceLoc loc() const;

  const Term& body() const { return kid(0); }

  Term at(SourceLoc loc) const;
  // Same node with new children (and for binders, new names).
  Term rebuild(std::array<Term, 3> kids) const;
  Term rebuild(std::array<Term, 3> kids, std::string name, std::string name2) const;
  Term with_annot(Type annot) const;

  bool same_node(const Term& other) const { return node_ == other.node_; }
  std::size_t size() const;  // number of nodes, counting shared subterms each time

 private:
  explicit Term(std::shared_ptr<const TermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const TermNode> node_;
};

struct TermNode {
  Tag tag;
  std::string name;
  std::string name2;
  Nat number;
  ArithOp op = ArithOp::Add;
  int index = 0;
  Type annot;
  Type annot2;
  std::array<Term, 3> kids;
  int arity = 0;
  SourceLoc loc;
};

// Variables bound by tag t in child position i.
std::vector<std::string> binders(const Term& t, int i);

std::set<std::string> free_vars(const Term& t);
bool occurs_free(const std::string& x, const Term& t);
// Every variable name appearing anywhere, bound or free.
std::set<std::string> all_names(const Term& t);
std::size_t count_free(const std::string& x, const Term& t);

// Capture-avoiding substitution.
Term subst(const Term& t, const std::string& x, const Term& v);
Term subst(const Term& t, const std::vector<std::pair<std::string, Term>>& sigma);

bool alpha_equal(const Term& a, const Term& b);

// Syntactic values of CBV PCF: numerals, variables, functions, nil, and
// pairs/conses of values.
bool is_cbv_value(const Term& t);

}  // namespace recx::pcf
