#pragma once

#include "recx/cbpv/term.hpp"
#include "recx/cbpv/typecheck.hpp"
#include "recx/pcf/term.hpp"
#include "recx/pcfc/pcfc.hpp"

namespace recx::extract {

// Potentials of values: nat and products as themselves, lists as their
// length, thunks as the carrier of their computation's algebra.
pcf::Type potential_type(const cbpv::ValType& a);
pcfc::CostAlgebra complexity_algebra(const cbpv::CompType& b);

struct ExtractionResult {
  pcf::Term term;
  pcf::Type type;
};

// <<V>> and ||M||. The context gives the CBPV types of free variables, whose
// potentials keep the same names.
ExtractionResult potential(const cbpv::Value& v, const cbpv::Context& ctx = {});
ExtractionResult complexity(const cbpv::Comp& m, const cbpv::Context& ctx = {});

pcf::Term potential_term(const cbpv::Value& v, const cbpv::Context& ctx = {});
pcf::Term complexity_term(const cbpv::Comp& m, const cbpv::Context& ctx = {});

// Source-level extraction: embed, then extract. Under CBV the result has
// type Cost x potential.
ExtractionResult extract(const pcf::Term& t, pcf::Strategy s);
pcf::Term extract_cbv(const pcf::Term& t);
pcf::Term extract_cbn(const pcf::Term& t);

// The PCFc context of potentials for a CBPV context.
pcf::TypingContext potential_context(const cbpv::Context& ctx);

}  // namespace recx::extract
