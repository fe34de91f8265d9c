#pragma once

#include <stdexcept>
#include <string>

namespace flexcontact {

/// Raised when caller-supplied data violates a documented precondition or
/// schema. The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidInput(message);
}

}  // namespace flexcontact
