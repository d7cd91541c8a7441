#include "recx/arith.hpp"

namespace recx {

Nat apply_arith(ArithOp op, const Nat& a, const Nat& b) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a > b ? Nat(a - b) : Nat(0);
    case ArithOp::Mul:
      return a * b;
    case ArithOp::Div:
      return b == 0 ? Nat(0) : Nat(a / b);
    case ArithOp::Mod:
      return b == 0 ? Nat(0) : Nat(a % b);
  }
  return 0;
}

std::string_view arith_keyword(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return "add";
    case ArithOp::Sub: return "sub";
    case ArithOp::Mul: return "mul";
    case ArithOp::Div: return "div";
    case ArithOp::Mod: return "mod";
  }
  return "?";
}

std::optional<ArithOp> arith_from_keyword(std::string_view word) {
  if (word == "add") return ArithOp::Add;
  if (word == "sub") return ArithOp::Sub;
  if (word == "mul") return ArithOp::Mul;
  if (word == "div") return ArithOp::Div;
  if (word == "mod") return ArithOp::Mod;
  return std::nullopt;
}

}  // namespace recx
