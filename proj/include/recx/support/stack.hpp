#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <type_traits>
#include <utility>

namespace recx {

namespace detail {
bool on_large_stack_now();
void run_with_large_stack(const std::function<void()>& body);
}  // namespace detail

// The evaluators are plain recursive interpreters, so deep programs need more
// stack than a default thread has. Runs f on a thread with a large stack
// unless the caller is already on one.
template <class F>
auto with_large_stack(F&& f) -> std::invoke_result_t<F> {
  using R = std::invoke_result_t<F>;
  if (detail::on_large_stack_now()) return f();
  std::exception_ptr error;
  if constexpr (std::is_void_v<R>) {
    detail::run_with_large_stack([&] {
      try {
        f();
      } catch (...) {
        error = std::current_exception();
      }
    });
    if (error) std::rethrow_exception(error);
  } else {
    std::optional<R> result;
    detail::run_with_large_stack([&] {
      try {
        result.emplace(f());
      } catch (...) {
        error = std::current_exception();
      }
    });
    if (error) std::rethrow_exception(error);
    return std::move(*result);
  }
}

}  // namespace recx
