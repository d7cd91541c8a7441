#pragma once

#include <string>
#include <string_view>

#include "recx/cbpv/term.hpp"
#include "recx/support/sexpr.hpp"

namespace recx::cbpv {

// Surface syntax:
//   values        x | (num k) | (pair V W) | (thunk M) | nil | (cons V W)
//   computations  (return V) | (bind (x M) N) | (force V) | (lam (x A) M)
//                 | (app M V) | (cpair M N) | (cproj1 M) | (cproj2 M)
//                 | (split V (x y) N) | (ifz V P Q) | (calc (v (op V W)) N)
//                 | (charge M) | (cfix (x B) M) | (lcase V Mnil (h t Mcons))
//   value types   nat | (prod A A) | (U B) | (list A)
//   comp types    (F A) | (with B B) | (-> A B)
// A computation form in value position, or the reverse, is a PolarityError.
Comp parse_comp(std::string_view text);
Value parse_value(std::string_view text);

Comp comp_from_sexpr(const SExpr& e);
Value value_from_sexpr(const SExpr& e);
ValType valtype_from_sexpr(const SExpr& e);
CompType comptype_from_sexpr(const SExpr& e);

SExpr to_sexpr(const Value& v);
SExpr to_sexpr(const Comp& m);
SExpr to_sexpr(const ValType& a);
SExpr to_sexpr(const CompType& b);

std::string print(const Value& v, std::size_t width = 0);
std::string print(const Comp& m, std::size_t width = 0);

}  // namespace recx::cbpv
