#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "recx/pcf/term.hpp"
#include "recx/support/sexpr.hpp"

namespace recx::pcf {

struct Parsed {
  Term term;
  Strategy strategy;
};

// Reads one program. The strategy is `forced` if given, otherwise CBN when
// the program uses `fix`, else CBV. `let` binder types are filled in when the
// program typechecks; otherwise the raw term is returned and typechecking
// reports the error.
Parsed parse_pcf(std::string_view text, std::optional<Strategy> forced = std::nullopt);

// The raw reader shared by PCF and PCFc; no elaboration.
Term term_from_sexpr(const SExpr& e);
Type type_from_sexpr(const SExpr& e);
SExpr to_sexpr(const Term& t);
SExpr to_sexpr(const Type& t);

std::string print_term(const Term& t, std::size_t width = 0);

// CBN when the term contains fix, CBV when it uses rec or lists.
std::optional<Strategy> implied_strategy(const Term& t);

}  // namespace recx::pcf
