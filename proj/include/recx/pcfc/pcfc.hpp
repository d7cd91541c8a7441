#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

#include "recx/cbpv/type.hpp"
#include "recx/pcf/machine.hpp"
#include "recx/pcf/term.hpp"
#include "recx/pcf/typecheck.hpp"

// The recurrence language: call-by-name PCF plus a cost type with zero, one
// and sum. It reuses the PCF term representation.
namespace recx::pcfc {

using pcf::Tag;
using pcf::Term;
using pcf::Type;
using pcf::TypeKind;

Type typecheck_pcfc(const pcf::TypingContext& ctx, const Term& t);

// Parses a recurrence term, filling in let binder types.
Term parse_pcfc(std::string_view text);

// The right-associated sum one + (one + ... + zero).
Term numc(const Nat& n);

// Rewrites every compact cost numeral (cnum k) into numc(k).
Term expand_cost_numerals(const Term& t);

struct Outcome {
  std::variant<Term, OutOfFuel, Stuck> result;
  std::uint64_t steps = 0;

  bool converged() const { return std::holds_alternative<Term>(result); }
  const Term& value() const { return std::get<Term>(result); }
};

// Costless call-by-name evaluation. Costs evaluate to the compact numeral
// (cnum k), which stands for numc(k).
Outcome eval_pcfc(const Term& t, std::uint64_t fuel = kDefaultFuel);

// fix^0 = fix x.x, fix^(n+1) = body[fix^n / x].
Term unfold_fix(const std::string& x, const Type& a, const Term& body, unsigned n);

// A carrier type and a structure map alpha(c, x), an open term in the cost
// variable c and the carrier variable x.
struct CostAlgebra {
  Type carrier;
  Term structure;

  static inline const std::string kCost = "c";
  static inline const std::string kValue = "x";

  // alpha(cost, e), by substitution.
  Term apply(const Term& cost, const Term& e) const;
};

using PotentialType = std::function<Type(const cbpv::ValType&)>;

// F A: the free algebra on Cost x <<A>>. With: componentwise. Arrow:
// pointwise under a lambda.
CostAlgebra algebra_for(const cbpv::CompType& b, const PotentialType& potential);

}  // namespace recx::pcfc
