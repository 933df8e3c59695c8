#ifndef CUTSCAN_ERRORS_HPP
#define CUTSCAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cutscan {

/// Malformed input: bad graph files, infeasible generator specs,
/// operations invoked on graphs that violate their preconditions.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// A size cap was exceeded (brute-force enumeration and similar
/// exponential oracles refuse instead of running forever).
class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cutscan

#endif  // CUTSCAN_ERRORS_HPP
