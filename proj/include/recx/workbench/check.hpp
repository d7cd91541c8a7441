#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "recx/model/sized.hpp"
#include "recx/pcf/machine.hpp"
#include "recx/pcf/term.hpp"
#include "recx/support/nat.hpp"

namespace recx::workbench {

// Ordered from best to worst.
enum class Verdict { Holds, HoldsTriviallyInf, InconclusiveFuel, Violation };

std::string_view to_string(Verdict v);
Verdict worse(Verdict a, Verdict b);

struct BoundReport {
  std::string id;
  pcf::Strategy strategy = pcf::Strategy::CBV;
  std::uint64_t fuel_used = 0;
  ExtNat observed_cost;  // nullopt when the run did not finish
  std::string observed_value;
  ExtNat bound_cost;  // nullopt is infinity
  std::string bound_potential;
  Verdict verdict = Verdict::Holds;
  std::string note;
  // Checks of applications and projections of the program.
  std::vector<BoundReport> parts;

  // The worst verdict here or in any part.
  Verdict overall() const;
};

struct CheckOptions {
  std::string id = "program";
  std::uint64_t fuel = kDefaultFuel;
  std::vector<Nat> samples = {0, 1, 2, 3, 5, 8, 13};
  // Selects the element contents of sampled lists; lengths never change.
  unsigned contents = 0;
  model::ModelOptions model;
};

// Runs the program and denotes its extracted recurrence, then compares cost
// and value at observable types. Function-typed programs are applied to
// sample arguments; call-by-name pairs are checked through projections.
BoundReport check_bound(const pcf::Term& t, pcf::Strategy s, const CheckOptions& opts = {});

// A closed value of type a whose size is k: the numeral k, a list of length
// k, pairs of such, or a constant function.
pcf::Term sample_argument(const pcf::Type& a, const Nat& k, unsigned contents = 0);

struct CostDiff {
  ExtNat pcf_cost;
  ExtNat cbpv_cost;
  bool equal = true;
  std::string note;
};

// The abstract machine gets this many times the steps the source run took,
// since it takes more steps per source step.
inline constexpr std::uint64_t kCbpvFuelFactor = 20;

// Compares the source cost with the cost of the embedding. Unequal when the
// source converges and the embedding does not match it in cost (or in value,
// at type nat). The embedding is not run when the source does not converge.
CostDiff diff_cost(const pcf::Term& t, pcf::Strategy s, std::uint64_t fuel = kDefaultFuel);

// {"id","strategy","observed_cost","bound_cost","verdict","fuel"}.
nlohmann::json to_json(const BoundReport& r);
// The report and then every part, depth first, one JSON object per line.
std::string to_json_lines(const BoundReport& r);
std::string to_text(const BoundReport& r);

}  // namespace recx::workbench
