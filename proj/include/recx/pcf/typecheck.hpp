#pragma once

#include "recx/pcf/term.hpp"
#include "recx/support/scope.hpp"

namespace recx::pcf {

using TypingContext = Scope<Type>;

enum class Language { Pcf, Pcfc };

struct Typed {
  Term term;
  Type type;
};

// Typechecks and fills in the binder types of `let`-desugared lambdas, whose
// annotation the parser leaves Unknown. For Language::Pcfc the strategy must
// be CBN.
Typed elaborate(const TypingContext& ctx, const Term& t, Strategy s, Language lang = Language::Pcf);

Type typecheck_pcf(const TypingContext& ctx, const Term& t, Strategy s);

// Lists appear only in CBV programs, cost types only in the recurrence
// language.
void check_type_admissible(const Type& a, Strategy s, Language lang, SourceLoc loc = {});

}  // namespace recx::pcf
