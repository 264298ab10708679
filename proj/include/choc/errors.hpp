#pragma once

#include <stdexcept>
#include <string>

namespace choc {

// Argument outside the mathematical domain of an operation (bad side length,
// out-of-bounds cell, malformed level).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input is valid but exceeds a configured size bound.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A move that is not in legal_moves() of the state it was applied to.
class IllegalMoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized input (PBM, CSV).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace choc
