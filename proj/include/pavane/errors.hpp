#pragma once

#include <stdexcept>
#include <string>

namespace pavane {

// Malformed input: bad permutation text, bad descriptor, parameter out of range.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A requested size is above the configured enumeration ceiling.
class CeilingExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Reading or writing the count cache failed.
class CacheError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An invariant that should be impossible to violate was violated. Always a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace pavane
