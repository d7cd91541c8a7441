#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace recx {

// Persistent association list. Extension shares the tail, lookup finds the
// innermost binding, so shadowing works without copying.
template <class V>
class Scope {
 public:
  Scope() = default;

  Scope extend(std::string name, V value) const {
    Scope s;
    s.head_ = std::make_shared<const Node>(Node{std::move(name), std::move(value), head_});
    return s;
  }

  const V* find(const std::string& name) const {
    for (const Node* n = head_.get(); n; n = n->next.get())
      if (n->name == name) return &n->value;
    return nullptr;
  }

  bool empty() const { return !head_; }

  // Bindings innermost first, shadowed ones included.
  std::vector<std::pair<std::string, V>> entries() const {
    std::vector<std::pair<std::string, V>> out;
    for (const Node* n = head_.get(); n; n = n->next.get()) out.emplace_back(n->name, n->value);
    return out;
  }

 private:
  struct Node {
    std::string name;
    V value;
    std::shared_ptr<const Node> next;
  };
  std::shared_ptr<const Node> head_;
};

}  // namespace recx
