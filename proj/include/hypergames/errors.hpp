#ifndef HYPERGAMES_ERRORS_HPP
#define HYPERGAMES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypergames {

// Bad input: malformed documents, unknown identifiers, objectives outside the
// supported fragment, mismatched models. Maps to CLI exit code 2.
struct model_error : std::runtime_error {
  explicit model_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configurable state budget was exhausted during an enumeration.
// Maps to CLI exit code 3.
struct cap_exceeded_error : std::runtime_error {
  explicit cap_exceeded_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hypergames

#endif
