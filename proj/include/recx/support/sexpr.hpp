#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "recx/support/errors.hpp"

namespace recx {

struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  SourceLoc loc;

  static SExpr make_atom(std::string a, SourceLoc loc = {});
  static SExpr make_list(std::vector<SExpr> items, SourceLoc loc = {});

  bool is_atom() const { return !is_list; }
  bool is_atom(std::string_view a) const { return !is_list && atom == a; }
  // A list whose first item is the atom `head`.
  bool is_form(std::string_view head) const;
};

std::vector<SExpr> read_sexprs(std::string_view text);
// Exactly one expression, else ParseError.
SExpr read_sexpr(std::string_view text);

// width 0 prints on one line; otherwise lists that do not fit are broken
// with the head kept on the first line.
std::string print_sexpr(const SExpr& e, std::size_t width = 0);

bool is_identifier(std::string_view a);
bool is_numeral(std::string_view a);

}  // namespace recx
