#pragma once

#include <stdexcept>
#include <string>

namespace concordia {

// Raised when an operation's mathematical precondition does not hold
// (singular matrix, non-residue, hypothesis of a certificate violated, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for malformed input: non-square matrices, unparsable rationals,
// bad JSON documents.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// Unparsable text: rationals, JSON documents.
class ParseError : public InvalidArgument {
 public:
  explicit ParseError(const std::string& what) : InvalidArgument(what) {}
};

}  // namespace concordia
