#pragma once

#include <cstdint>
#include <vector>

namespace primeplet {

// Memory policy: a dense sieve is used up to kDenseSieveMax; beyond that the
// sieve runs in segments of kSegmentSize. Requests above kSieveCapacity fail
// with CapacityError.
inline constexpr std::uint64_t kDenseSieveMax = 100'000'000;
inline constexpr std::uint64_t kSegmentSize = 1u << 21;
inline constexpr std::uint64_t kSieveCapacity = 4'000'000'000ull;

/// All primes <= limit, strictly ascending. Immutable once built.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;

  bool contains(std::uint64_t n) const;  // binary search
};

PrimeTable primes_up_to(std::uint64_t limit);

/// O(1) membership bitset over the odd numbers <= limit (plus 2).
class PrimeSet {
 public:
  explicit PrimeSet(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  bool contains(std::uint64_t n) const {
    if (n < 2 || n > limit_) return false;
    if ((n & 1) == 0) return n == 2;
    std::uint64_t i = n >> 1;
    return (bits_[i >> 6] >> (i & 63)) & 1;
  }

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace primeplet
