#pragma once

#include <stdexcept>
#include <string>

namespace powerag {

// Library-wide exception. Contract violations (bad parameters, mismatched
// fields, membership failures) throw this; the C API translates it into
// status codes at the boundary.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a function is asked for coordinates in a space it does not
// belong to.
class MembershipError : public Error {
 public:
  explicit MembershipError(const std::string& what) : Error(what) {}
};

}  // namespace powerag
