#pragma once

#include <stdexcept>
#include <string>

namespace netproj {

/// Base class of every error thrown by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad argument or violated precondition.
class validation_error : public error {
public:
  using error::error;
};

/// Malformed textual input (edge lists, bracket descriptions).
class parse_error : public error {
public:
  using error::error;
};

/// A configurable enumeration cap was exceeded; the message names the cap.
class resource_error : public error {
public:
  using error::error;
};

/// A directive cannot be met by any topology (admissible distance below 1,
/// or a speedup target above the branch count).
class infeasible_error : public error {
public:
  using error::error;
};

/// Operation not defined for the projection mode at hand.
class unsupported_mode_error : public validation_error {
public:
  using validation_error::validation_error;
};

} // namespace netproj
