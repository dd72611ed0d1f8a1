#pragma once
#include <stdexcept>
#include <string>

namespace slnchar {

// Bad arguments: size mismatch, divisibility violated, labels out of range.
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A uniqueness contract failed (locate_zE).
struct UniquenessViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search came back empty.
struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidArgument(msg);
}

}  // namespace slnchar
