#pragma once

#include <stdexcept>
#include <string>

namespace speccert {

// Malformed or out-of-contract input (bad index, empty block, asymmetric matrix).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but violates a hypothesis the operation relies on
// (block smaller than 3, numerically zero eigengap).
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace speccert
