#pragma once

#include <memory>
#include <optional>
#include <string>

namespace recx::pcf {

enum class TypeKind {
  Nat,
  Cost,  // recurrence language only
  Prod,
  Arrow,
  List,
  // Element type of a bare `nil` before anything pins it down. Unifies with
  // every type.
  Unknown,
};

struct TypeNode;

class Type {
 public:
  Type() = default;

  static Type nat();
  static Type cost();
  static Type prod(Type left, Type right);
  static Type arrow(Type dom, Type cod);
  static Type list(Type elem);
  static Type unknown();

  TypeKind kind() const;
  bool is(TypeKind k) const { return node_ && kind() == k; }
  explicit operator bool() const { return static_cast<bool>(node_); }

  // Prod components, Arrow domain/codomain, List element.
  const Type& left() const;
  const Type& right() const;
  const Type& dom() const { return left(); }
  const Type& cod() const { return right(); }
  const Type& elem() const { return left(); }

  bool has_unknown() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

 private:
  explicit Type(std::shared_ptr<const TypeNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const TypeNode> node_;
};

struct TypeNode {
  TypeKind kind;
  Type a;
  Type b;
};

// Most general common instance, treating Unknown as a wildcard.
std::optional<Type> unify(const Type& a, const Type& b);

std::string to_string(const Type& t);

}  // namespace recx::pcf
