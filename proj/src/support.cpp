#include <pthread.h>

#include <cctype>
#include <stdexcept>

#include "recx/support/errors.hpp"
#include "recx/support/names.hpp"
#include "recx/support/stack.hpp"

namespace recx {

std::string SourceLoc::str() const {
  if (!known()) return "?";
  return std::to_string(line) + ":" + std::to_string(column);
}

static std::string located(const std::string& msg, SourceLoc loc) {
  return loc.known() ? loc.str() + ": " + msg : msg;
}

ParseError::ParseError(const std::string& msg, SourceLoc loc)
    : Error(located(msg, loc)), msg_(msg), loc_(loc) {}

TypeError::TypeError(const std::string& msg, SourceLoc loc)
    : Error(located(msg, loc)), msg_(msg), loc_(loc) {}

std::string fresh_name(std::string_view base, const std::function<bool(const std::string&)>& taken) {
  std::string name(base);
  do name += '\'';
  while (taken(name));
  return name;
}

std::string NameSupply::fresh(std::string_view base) {
  std::string name(base);
  for (unsigned i = 1; used_.count(name); ++i) name = std::string(base) + std::to_string(i);
  used_.insert(name);
  return name;
}

namespace detail {

namespace {
thread_local bool large_stack = false;
constexpr std::size_t kStackBytes = std::size_t{1} << 30;

struct Job {
  const std::function<void()>* body;
};

void* trampoline(void* arg) {
  large_stack = true;
  (*static_cast<Job*>(arg)->body)();
  return nullptr;
}
}  // namespace

bool on_large_stack_now() { return large_stack; }

void run_with_large_stack(const std::function<void()>& body) {
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, kStackBytes);
  Job job{&body};
  pthread_t thread;
  int rc = pthread_create(&thread, &attr, trampoline, &job);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    // No thread available; run in place and hope the program is shallow.
    body();
    return;
  }
  pthread_join(thread, nullptr);
}

}  // namespace detail
}  // namespace recx
