#pragma once

#include <stdexcept>
#include <string>

namespace pbsq {

// Thrown when a run would exceed a memory or enumeration budget. Distinct
// from domain/range errors so callers can offer an --extended escape hatch.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pbsq
