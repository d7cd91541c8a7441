#pragma once

#include "recx/cbpv/term.hpp"
#include "recx/support/scope.hpp"

namespace recx::cbpv {

using Context = Scope<ValType>;

ValType typecheck_val(const Context& ctx, const Value& v);
CompType typecheck_comp(const Context& ctx, const Comp& m);

}  // namespace recx::cbpv
