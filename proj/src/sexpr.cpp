#include "recx/support/sexpr.hpp"

#include <cctype>

namespace recx {

SExpr SExpr::make_atom(std::string a, SourceLoc loc) {
  SExpr e;
  e.atom = std::move(a);
  e.loc = loc;
  return e;
}

SExpr SExpr::make_list(std::vector<SExpr> items, SourceLoc loc) {
  SExpr e;
  e.is_list = true;
  e.items = std::move(items);
  e.loc = loc;
  return e;
}

bool SExpr::is_form(std::string_view head) const {
  return is_list && !items.empty() && items[0].is_atom(head);
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> all() {
    std::vector<SExpr> out;
    skip();
    while (pos_ < text_.size()) {
      out.push_back(one());
      skip();
    }
    return out;
  }

 private:
  SourceLoc here() const { return {line_, col_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  SExpr one() {
    SourceLoc start = here();
    char c = text_[pos_];
    if (c == ')') throw ParseError("unexpected ')'", start);
    if (c == '(') {
      advance();
      std::vector<SExpr> items;
      skip();
      while (true) {
        if (pos_ >= text_.size()) throw ParseError("unclosed '('", start);
        if (text_[pos_] == ')') {
          advance();
          return SExpr::make_list(std::move(items), start);
        }
        items.push_back(one());
        skip();
      }
    }
    std::string atom;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (d == '(' || d == ')' || d == ';' || std::isspace(static_cast<unsigned char>(d))) break;
      atom += d;
      advance();
    }
    return SExpr::make_atom(std::move(atom), start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

void flat(const SExpr& e, std::string& out) {
  if (e.is_atom()) {
    out += e.atom;
    return;
  }
  out += '(';
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i) out += ' ';
    flat(e.items[i], out);
  }
  out += ')';
}

void pretty(const SExpr& e, std::size_t width, std::size_t indent, std::string& out) {
  std::string one_line;
  flat(e, one_line);
  if (e.is_atom() || indent + one_line.size() <= width || e.items.size() < 2) {
    out += one_line;
    return;
  }
  // Keep the head (and a short binder list right after it) on the first line.
  out += '(';
  std::string head;
  flat(e.items[0], head);
  out += head;
  std::size_t first = 1;
  if (e.items[0].is_atom() && e.items.size() > 2 && e.items[1].is_list) {
    std::string binder;
    flat(e.items[1], binder);
    if (indent + head.size() + binder.size() + 2 <= width) {
      out += ' ';
      out += binder;
      first = 2;
    }
  }
  std::size_t child_indent = indent + 2;
  for (std::size_t i = first; i < e.items.size(); ++i) {
    out += '\n';
    out.append(child_indent, ' ');
    pretty(e.items[i], width, child_indent, out);
  }
  out += ')';
}

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) { return Reader(text).all(); }

SExpr read_sexpr(std::string_view text) {
  auto all = read_sexprs(text);
  if (all.empty()) throw ParseError("empty input", {1, 1});
  if (all.size() > 1) throw ParseError("trailing input after expression", all[1].loc);
  return std::move(all[0]);
}

std::string print_sexpr(const SExpr& e, std::size_t width) {
  std::string out;
  if (width == 0)
    flat(e, out);
  else
    pretty(e, width, 0, out);
  return out;
}

bool is_identifier(std::string_view a) {
  if (a.empty()) return false;
  unsigned char c0 = static_cast<unsigned char>(a[0]);
  if (!(std::isalpha(c0) || c0 == '_')) return false;
  for (char c : a) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || u == '_' || u == '\'' || u == '-')) return false;
  }
  return true;
}

bool is_numeral(std::string_view a) {
  if (a.empty()) return false;
  for (char c : a)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace recx
