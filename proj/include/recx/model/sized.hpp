#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "recx/pcf/term.hpp"
#include "recx/support/nat.hpp"
#include "recx/support/scope.hpp"

// Sized-domain semantics of recurrence terms. Nat and Cost are the flat
// naturals with bottom read as infinity; bottom is the largest element of the
// size order and absorbs every operation.
namespace recx::model {

class SizedValue;
struct Thunk;
using ThunkPtr = std::shared_ptr<Thunk>;
using Env = Scope<ThunkPtr>;

class SizedValue {
 public:
  enum class Kind { Fin, Bottom, Pair, Closure, JoinFun };

  static SizedValue fin(Nat k);
  static SizedValue bottom();
  static SizedValue pair(ThunkPtr a, ThunkPtr b);
  static SizedValue pair(SizedValue a, SizedValue b);
  static SizedValue closure(std::string param, pcf::Term body, Env env);
  static SizedValue join_fun(SizedValue f, SizedValue g);

  SizedValue() : SizedValue(bottom()) {}

  Kind kind() const { return node_->kind; }
  bool is_fin() const { return kind() == Kind::Fin; }
  bool is_bottom() const { return kind() == Kind::Bottom; }
  bool is_pair() const { return kind() == Kind::Pair; }
  bool is_function() const { return kind() == Kind::Closure || kind() == Kind::JoinFun; }

  const Nat& number() const { return node_->number; }
  const ThunkPtr& component(int i) const { return i == 1 ? node_->left : node_->right; }
  const std::string& param() const { return node_->param; }
  const pcf::Term& body() const { return node_->body; }
  const Env& env() const { return node_->env; }
  const SizedValue& joined(int i) const { return i == 1 ? *node_->f : *node_->g; }

 private:
  struct Node {
    Kind kind;
    Nat number;
    ThunkPtr left, right;
    std::string param;
    pcf::Term body;
    Env env;
    std::shared_ptr<const SizedValue> f, g;
  };
  explicit SizedValue(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// A memoized suspended value.
struct Thunk {
  std::optional<SizedValue> value;
  std::function<SizedValue()> compute;
  bool forcing = false;

  static ThunkPtr ready(SizedValue v);
  static ThunkPtr delay(std::function<SizedValue()> f);
  const SizedValue& force();
};

struct ModelOptions {
  // Unfoldings of each fixed point before it is cut off at bottom.
  unsigned fix_depth = 1000;
  // Total evaluation steps; once spent every remaining subterm is bottom.
  std::uint64_t step_budget = 20'000'000;
};

// An evaluation session. Values it returns may hold suspended work that is
// charged to the same budget when forced later.
class Model {
 public:
  explicit Model(ModelOptions opts = {});

  SizedValue denote(const pcf::Term& t, const Env& env = {});
  SizedValue apply(const SizedValue& f, const SizedValue& arg);
  SizedValue project(int i, const SizedValue& v);

  // Whether the step budget ran out, making some result a cut-off bound.
  bool exhausted() const;
  std::uint64_t steps() const;

  struct State;

 private:
  std::shared_ptr<State> state_;
};

SizedValue denote(const pcf::Term& t, const Env& env = {}, ModelOptions opts = {});

// Bottom if either is bottom, max on naturals, componentwise on pairs and
// lazily pointwise on functions. Throws ShapeMismatch otherwise.
SizedValue join(const SizedValue& v, const SizedValue& w);

// The size order at first-order types. Throws Undecidable on functions.
bool size_leq(const SizedValue& v, const SizedValue& w);
bool size_equal(const SizedValue& v, const SizedValue& w);

// Numerals print as digits, bottom as "inf", pairs as <a, b>.
std::string to_string(const SizedValue& v);

// The cost component of a value at type Cost x A, or at Cost.
std::optional<Nat> cost_of(const SizedValue& v);

}  // namespace recx::model
