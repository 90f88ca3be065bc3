#pragma once

#include <stdexcept>
#include <string>

namespace triptych {

// Bad input data: malformed CSV, out-of-range values, empty selections.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// The input is well formed but the requested computation is undefined for it
// (single-class outcomes, divergent integrals, mismatched decompositions).
class DegenerateError : public std::runtime_error {
 public:
  explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace triptych
