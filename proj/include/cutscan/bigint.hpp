#ifndef CUTSCAN_BIGINT_HPP
#define CUTSCAN_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cutscan {

/// Unsigned arbitrary-precision integer, just large enough for the
/// skipped-state accumulator: contributions of 2^(c-1) overflow 64-bit
/// words once graphs pass ~65 vertices.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t value);

  /// this += 2^exponent.
  void add_pow2(unsigned exponent);
  void add(const BigUint& other);

  bool is_zero() const { return limbs_.empty(); }
  std::string to_string() const;  // decimal

  /// Value as u64; throws std::overflow_error if it does not fit.
  std::uint64_t to_u64() const;

  bool operator==(const BigUint&) const = default;

 private:
  void trim();
  std::vector<std::uint64_t> limbs_;  // little-endian, no trailing zeros
};

}  // namespace cutscan

#endif  // CUTSCAN_BIGINT_HPP
