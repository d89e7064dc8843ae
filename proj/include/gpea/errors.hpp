#pragma once

#include <stdexcept>
#include <string>

namespace gpea {

/// Bad arguments: identifiers out of range, unknown names, malformed input.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its mathematical domain
/// (a non-central element for pi_c, a set that is not type determining, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A size cap (enumeration order, cone size, family length) was exceeded.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace gpea
