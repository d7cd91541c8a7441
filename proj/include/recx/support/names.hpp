#pragma once

#include <functional>
#include <set>
#include <string>
#include <string_view>

namespace recx {

// Appends primes to base until the name is not taken.
std::string fresh_name(std::string_view base, const std::function<bool(const std::string&)>& taken);

// Hands out names unused by anything seen so far: base, then base1, base2... Translations seed it with
// every name in the source term so their own binders cannot capture.
class NameSupply {
 public:
  NameSupply() = default;
  explicit NameSupply(std::set<std::string> used) : used_(std::move(used)) {}

  void reserve(const std::string& name) { used_.insert(name); }
  std::string fresh(std::string_view base);

 private:
  std::set<std::string> used_;
};

}  // namespace recx
