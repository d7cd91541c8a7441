#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>

#include "recx/pcf/term.hpp"

namespace recx {

// Receives one call per rule application: the rule name, the term it was
// applied to, and the derivation depth.
template <class T>
using Tracer = std::function<void(std::string_view rule, const T& term, int depth)>;

struct OutOfFuel {};
struct Stuck {
  std::string reason;
};

inline constexpr std::uint64_t kDefaultFuel = 100000;

}  // namespace recx

namespace recx::pcf {

struct Converged {
  Term value;
  std::uint64_t cost = 0;
};

struct EvalOutcome {
  std::variant<Converged, OutOfFuel, Stuck> result;
  std::uint64_t steps = 0;  // rule applications used

  bool converged() const { return std::holds_alternative<Converged>(result); }
  bool out_of_fuel() const { return std::holds_alternative<OutOfFuel>(result); }
  bool stuck() const { return std::holds_alternative<Stuck>(result); }
  const Converged& get() const { return std::get<Converged>(result); }
};

struct EvalOptions {
  std::uint64_t fuel = kDefaultFuel;
  Tracer<Term> trace;
};

// Big-step cost semantics. Applications (including recursive ones) and
// projections cost 1; everything else is free.
EvalOutcome eval_pcf(const Term& t, Strategy s, const EvalOptions& opts);
EvalOutcome eval_pcf(const Term& t, Strategy s, std::uint64_t fuel = kDefaultFuel);

// Cost of a converging run, nullopt (infinity) when fuel runs out.
ExtNat observed_cost(const Term& t, Strategy s, std::uint64_t fuel = kDefaultFuel);

// Whether v is a canonical form for the strategy.
bool is_canonical(const Term& v, Strategy s);

}  // namespace recx::pcf
