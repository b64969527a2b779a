#pragma once

#include <stdexcept>
#include <string>

namespace refinery {

// Invalid input: malformed documents, size mismatches, non-congruences.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A configurable enumeration cap was hit before the computation finished.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

// Raised by checks that are undefined on the empty algebra.
class NoGlobalSupport : public Error {
 public:
  NoGlobalSupport() : Error("algebra lacks global support (empty universe)") {}
};

}  // namespace refinery
