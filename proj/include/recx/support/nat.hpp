#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace recx {

// Numerals everywhere are unbounded naturals; only non-negative values are
// ever constructed.
using Nat = boost::multiprecision::cpp_int;

inline std::string to_string(const Nat& n) { return n.str(); }

// A natural or infinity. Used for costs reported by the harness.
using ExtNat = std::optional<Nat>;

inline std::string ext_to_string(const ExtNat& n) { return n ? n->str() : "inf"; }

}  // namespace recx
