#pragma once

#include <memory>
#include <optional>
#include <string>

namespace recx::cbpv {

enum class VKind { Nat, Prod, U, List, Unknown };
enum class CKind { F, With, Arrow };

struct ValTypeNode;
struct CompTypeNode;
class CompType;

class ValType {
 public:
  ValType() = default;
  static ValType nat();
  static ValType prod(ValType a, ValType b);
  static ValType thunk(CompType b);
  static ValType list(ValType a);
  static ValType unknown();  // element type of a bare nil

  VKind kind() const;
  bool is(VKind k) const { return node_ && kind() == k; }
  explicit operator bool() const { return static_cast<bool>(node_); }
  const ValType& left() const;   // Prod
  const ValType& right() const;  // Prod
  const ValType& elem() const { return left(); }  // List
  const CompType& comp() const;  // U

  friend bool operator==(const ValType& a, const ValType& b);
  friend bool operator!=(const ValType& a, const ValType& b) { return !(a == b); }

 private:
  explicit ValType(std::shared_ptr<const ValTypeNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ValTypeNode> node_;
};

class CompType {
 public:
  CompType() = default;
  static CompType free(ValType a);
  static CompType with(CompType b1, CompType b2);
  static CompType arrow(ValType a, CompType b);

  CKind kind() const;
  bool is(CKind k) const { return node_ && kind() == k; }
  explicit operator bool() const { return static_cast<bool>(node_); }
  const ValType& val() const;     // F result, Arrow domain
  const CompType& left() const;   // With
  const CompType& right() const;  // With, Arrow codomain
  const CompType& cod() const { return right(); }

  friend bool operator==(const CompType& a, const CompType& b);
  friend bool operator!=(const CompType& a, const CompType& b) { return !(a == b); }

 private:
  explicit CompType(std::shared_ptr<const CompTypeNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const CompTypeNode> node_;
};

struct ValTypeNode {
  VKind kind;
  ValType a, b;
  CompType c;
};

struct CompTypeNode {
  CKind kind;
  ValType a;
  CompType b1, b2;
};

std::optional<ValType> unify(const ValType& a, const ValType& b);
std::optional<CompType> unify(const CompType& a, const CompType& b);

std::string to_string(const ValType& a);
std::string to_string(const CompType& b);

}  // namespace recx::cbpv
