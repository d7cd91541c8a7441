#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "recx/model/sized.hpp"
#include "recx/pcf/term.hpp"
#include "recx/pcf/typecheck.hpp"
#include "recx/simplify.hpp"

namespace recx::workbench {

struct GenConfig {
  std::uint64_t seed = 0;
  // Depth 1 yields only leaves.
  unsigned max_depth = 5;
  pcf::Strategy strategy = pcf::Strategy::CBV;
  // Chance that the program's type is not nat.
  double type_bias = 0.3;
  // Weight of recursive definitions among function-typed terms.
  double recursion_rate = 0.6;
};

// A closed program that typechecks under cfg.strategy. Recursive functions
// only call themselves on x - k or x div k for a positive literal k, under a
// test of x against zero, so most programs terminate.
pcf::Term gen_program(const GenConfig& cfg);

// Greedily replaces subterms by their children or by leaves while the result
// still typechecks at the same type and still satisfies `keep`.
pcf::Term shrink(const pcf::Term& t, pcf::Strategy s, const std::function<bool(const pcf::Term&)>& keep,
                 unsigned max_rounds = 200);

struct PcfcGenConfig {
  std::uint64_t seed = 0;
  unsigned max_depth = 5;
  double recursion_rate = 0.3;
  // Chance of planting fix x.x at a leaf.
  double divergence_rate = 0.03;
};

// A recurrence term of type a (nat, cost, pairs or nat -> b) in ctx.
pcf::Term gen_pcfc_term(const PcfcGenConfig& cfg, const pcf::Type& a, const pcf::TypingContext& ctx = {});

// A fixed point fix var:type. body; type is nat or nat -> nat.
struct FixBody {
  std::string var;
  pcf::Type type;
  pcf::Term body;
};
FixBody gen_fix_body(std::uint64_t seed);

// Names of the simplifier's rewrite groups, one instance generator each.
const std::vector<std::string>& simplifier_rules();

// Free variables of rule instances: a, b : nat and c, d : cost.
pcf::TypingContext rule_instance_context();

struct RuleInstance {
  pcf::Term term;
  pcf::Type type;
  simplify::RuleSet rules;  // the groups that enable the rule
};
RuleInstance gen_rule_instance(std::string_view rule, std::uint64_t seed);

// Random values for every ground variable of ctx, bottom one time in ten.
model::Env ground_instantiation(const pcf::TypingContext& ctx, std::uint64_t seed);

}  // namespace recx::workbench
