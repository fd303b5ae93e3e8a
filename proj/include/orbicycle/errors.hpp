#ifndef ORBICYCLE_ERRORS_HPP
#define ORBICYCLE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace orbicycle {

// Domain error carrying a stable machine-readable kind ("OrderCapExceeded",
// "NotInvariant", ...) next to the human-readable message. The CLI maps the
// kind to stderr and exit code 65.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& what) {
  throw Error(std::move(kind), what);
}

}  // namespace orbicycle

#endif
