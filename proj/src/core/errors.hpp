#pragma once

#include <stdexcept>
#include <string>

namespace regult {

// Game description fails its structural invariants (ordering, ranges).
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& m) : std::runtime_error(m) {}
};

// A requested optimum does not exist (empty winning domain and the like).
struct infeasible_error : std::runtime_error {
  explicit infeasible_error(const std::string& m) : std::runtime_error(m) {}
};

// Instance sits on a boundary where the requested quantity is undefined.
struct degenerate_error : std::runtime_error {
  explicit degenerate_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace regult
