#pragma once

#include <string_view>

#include "recx/pcf/term.hpp"

namespace recx::simplify {

// Which rewrite groups are enabled. Core rules are always on.
struct RuleSet {
  bool core = true;
  bool eta = false;
  bool lists = false;

  // "core", "eta", "lists", or a comma-separated combination. Throws Error on
  // anything else.
  static RuleSet parse(std::string_view spec);
};

// Rewrites to a fixed point or until maxPasses passes have run. Every rule is
// an equality of the sized model, so denotations are preserved exactly.
pcf::Term simplify(const pcf::Term& t, RuleSet rules = {}, unsigned max_passes = 64);

}  // namespace recx::simplify
