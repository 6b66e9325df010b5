#pragma once

#include <stdexcept>
#include <string>

namespace fpp {

// Bad input: malformed text, degree mismatch, violated group-theoretic precondition.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Requested computation exceeds a configured enumeration cap.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A certified internal invariant failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fpp
