#pragma once

#include <stdexcept>
#include <string>

namespace landau {

// Input did not satisfy a documented precondition (bad file, malformed
// expression, non-invariant generator, inconsistent basis, ...). CLI exit 1.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// The computation itself cannot proceed (division by a vanishing quantity,
// non-invertible construction, resource cap, ...). CLI exit 2.
struct ComputationError : std::runtime_error {
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace landau
