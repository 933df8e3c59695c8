#include "cutscan/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutscan {

BigUint::BigUint(std::uint64_t value) {
  if (value != 0) limbs_.push_back(value);
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

void BigUint::add_pow2(unsigned exponent) {
  size_t limb = exponent / 64;
  std::uint64_t carry = std::uint64_t{1} << (exponent % 64);
  if (limbs_.size() <= limb) limbs_.resize(limb + 1, 0);
  for (size_t i = limb; carry != 0; ++i) {
    if (i == limbs_.size()) limbs_.push_back(0);
    std::uint64_t sum = limbs_[i] + carry;
    carry = sum < limbs_[i] ? 1 : 0;
    limbs_[i] = sum;
  }
}

void BigUint::add(const BigUint& other) {
  size_t size = std::max(limbs_.size(), other.limbs_.size());
  limbs_.resize(size, 0);
  std::uint64_t carry = 0;
  for (size_t i = 0; i < size; ++i) {
    std::uint64_t rhs = i < other.limbs_.size() ? other.limbs_[i] : 0;
    std::uint64_t sum = limbs_[i] + rhs;
    std::uint64_t carry1 = sum < limbs_[i] ? 1 : 0;
    std::uint64_t total = sum + carry;
    carry = carry1 + (total < sum ? 1 : 0);
    limbs_[i] = total;
  }
  if (carry) limbs_.push_back(carry);
  trim();
}

std::string BigUint::to_string() const {
  if (limbs_.empty()) return "0";
  std::vector<std::uint64_t> work(limbs_.rbegin(), limbs_.rend());  // big-endian
  std::string digits;
  const std::uint64_t base = 1'000'000'000ULL;
  while (!work.empty()) {
    // Divide the big-endian limb array by 1e9, collect the remainder.
    unsigned __int128 rem = 0;
    for (auto& limb : work) {
      unsigned __int128 cur = (rem << 64) | limb;
      limb = static_cast<std::uint64_t>(cur / base);
      rem = cur % base;
    }
    while (!work.empty() && work.front() == 0) work.erase(work.begin());
    std::string chunk = std::to_string(static_cast<std::uint64_t>(rem));
    if (work.empty()) {
      digits.insert(0, chunk);
    } else {
      digits.insert(0, std::string(9 - chunk.size(), '0') + chunk);
    }
  }
  return digits;
}

std::uint64_t BigUint::to_u64() const {
  if (limbs_.empty()) return 0;
  if (limbs_.size() > 1) throw std::overflow_error("BigUint does not fit in 64 bits");
  return limbs_[0];
}

}  // namespace cutscan
