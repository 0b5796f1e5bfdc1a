#pragma once

#include <stdexcept>
#include <string>

namespace ged {

// Invalid argument / precondition violation (bad probability, size mismatch, ...).
class ParamError : public std::invalid_argument {
 public:
  explicit ParamError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Problem size exceeds a configured resource guard (factorial oracle, qubit cap).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ged
