#pragma once

#include <variant>

#include "recx/cbpv/term.hpp"
#include "recx/cbpv/typecheck.hpp"
#include "recx/pcf/term.hpp"
#include "recx/pcf/typecheck.hpp"

namespace recx::embed {

// Call-by-name: nat is F nat, products are computation pairs, functions take
// thunks. Variables are forced. One charge per application and projection.
cbpv::CompType embed_cbn_type(const pcf::Type& a);
cbpv::Comp embed_cbn(const pcf::Term& t);

// Call-by-value: types become value types, values become values, and every
// term becomes a returner. A -> B is U(A -> F B).
cbpv::ValType embed_cbv_type(const pcf::Type& a);
cbpv::Value embed_cbv_val(const pcf::Term& v);  // v must be a syntactic value
cbpv::Comp embed_cbv(const pcf::Term& t);

// Variables of a CBN context denote thunks of the translated type.
cbpv::Context embed_context(const pcf::TypingContext& ctx, pcf::Strategy s);

struct EmbeddingResult {
  cbpv::Comp term;
  cbpv::CompType type;  // F of the value type under CBV
};

// Typechecks t and translates it with its type.
EmbeddingResult embed(const pcf::Term& t, pcf::Strategy s);

}  // namespace recx::embed
