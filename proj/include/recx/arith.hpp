#pragma once

#include <optional>
#include <string_view>

#include "recx/support/nat.hpp"

namespace recx {

enum class ArithOp { Add, Sub, Mul, Div, Mod };

// The one arithmetic shared by every evaluator: monus subtraction, floor
// division, and n / 0 = n mod 0 = 0.
Nat apply_arith(ArithOp op, const Nat& a, const Nat& b);

std::string_view arith_keyword(ArithOp op);
std::optional<ArithOp> arith_from_keyword(std::string_view word);

}  // namespace recx
