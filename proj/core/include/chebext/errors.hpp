#ifndef CHEBEXT_ERRORS_HPP
#define CHEBEXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chebext {

/// Malformed arguments: empty lists, out-of-range interval half-width,
/// non-terminating sequences where a terminating one is required.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Requested polynomial degree exceeds the supported maximum.
class DegreeLimit : public std::out_of_range {
 public:
  explicit DegreeLimit(const std::string& what) : std::out_of_range(what) {}
};

/// A canonical-moment sequence is too short for the requested degree.
class InsufficientData : public std::invalid_argument {
 public:
  explicit InsufficientData(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace chebext

#endif  // CHEBEXT_ERRORS_HPP
