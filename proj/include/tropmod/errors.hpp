#ifndef TROPMOD_ERRORS_HPP
#define TROPMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropmod {

// Thrown when a configured size cap (group elements, simplex classes,
// search nodes) is exceeded. Distinct from invalid input so that callers
// can retry with a larger cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid inputs -> std::invalid_argument ("input error").
// Hypothesis violations of a theorem checker -> std::domain_error.

}  // namespace tropmod

#endif
