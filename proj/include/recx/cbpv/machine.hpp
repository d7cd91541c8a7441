#pragma once

#include <cstdint>
#include <variant>

#include "recx/cbpv/term.hpp"
#include "recx/pcf/machine.hpp"

namespace recx::cbpv {

struct Terminal {
  Comp term;
  std::uint64_t cost = 0;
};

struct Outcome {
  std::variant<Terminal, OutOfFuel, Stuck> result;
  std::uint64_t steps = 0;

  bool converged() const { return std::holds_alternative<Terminal>(result); }
  bool out_of_fuel() const { return std::holds_alternative<OutOfFuel>(result); }
  bool stuck() const { return std::holds_alternative<Stuck>(result); }
  const Terminal& get() const { return std::get<Terminal>(result); }
};

struct EvalOptions {
  std::uint64_t fuel = kDefaultFuel;
  Tracer<Comp> trace;
};

// Only charge costs anything.
Outcome eval_cbpv(const Comp& m, const EvalOptions& opts);
Outcome eval_cbpv(const Comp& m, std::uint64_t fuel = kDefaultFuel);

}  // namespace recx::cbpv
