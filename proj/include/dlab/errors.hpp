#ifndef DLAB_ERRORS_HPP
#define DLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dlab {

// Thrown when an enumeration or recursion would exceed a configured cap.
// The CLI maps this to its own exit code, distinct from usage errors.
class resource_limit_error : public std::runtime_error {
public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Malformed cache file; carries the offending line number (1-based, 0 = header).
class cache_error : public std::runtime_error {
public:
  cache_error(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

}  // namespace dlab

#endif
