#pragma once

#include <stdexcept>
#include <string>

namespace recx {

struct SourceLoc {
  int line = 0;
  int column = 0;

  bool known() const { return line > 0; }
  std::string str() const;
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, SourceLoc loc);
  SourceLoc loc() const { return loc_; }
  const std::string& message() const { return msg_; }

 private:
  std::string msg_;
  SourceLoc loc_;
};

class TypeError : public Error {
 public:
  TypeError(const std::string& msg, SourceLoc loc = {});
  SourceLoc loc() const { return loc_; }
  const std::string& message() const { return msg_; }

 private:
  std::string msg_;
  SourceLoc loc_;
};

// A construct used under the wrong evaluation strategy, e.g. fix under CBV.
class StrategyError : public TypeError {
 public:
  using TypeError::TypeError;
};

// A computation where a value belongs, or the reverse.
class PolarityError : public TypeError {
 public:
  using TypeError::TypeError;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class Undecidable : public Error {
 public:
  using Error::Error;
};

}  // namespace recx
