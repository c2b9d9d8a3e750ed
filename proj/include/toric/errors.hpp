#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Malformed input: syntax errors, violated domain invariants, bad limits.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Well-formed input for which the requested theorem does not apply.
class InapplicableError : public std::domain_error {
 public:
  explicit InapplicableError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace toric
