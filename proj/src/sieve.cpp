#include "primeplet/sieve.hpp"

#include <algorithm>
#include <cmath>

#include "primeplet/errors.hpp"

namespace primeplet {

namespace {

// Odd-only dense sieve up to `limit`; bit i represents 2i+1.
std::vector<std::uint64_t> odd_bits(std::uint64_t limit) {
  std::uint64_t n_odds = limit / 2 + 1;
  std::vector<std::uint64_t> bits((n_odds + 63) / 64, ~0ull);
  auto clear = [&](std::uint64_t i) { bits[i >> 6] &= ~(1ull << (i & 63)); };
  clear(0);  // 1 is not prime
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    if ((bits[(p >> 1) >> 6] >> ((p >> 1) & 63)) & 1) {
      for (std::uint64_t c = p * p; c <= limit; c += 2 * p) clear(c >> 1);
    }
  }
  return bits;
}

}  // namespace

bool PrimeTable::contains(std::uint64_t n) const {
  return std::binary_search(primes.begin(), primes.end(), n);
}

PrimeTable primes_up_to(std::uint64_t limit) {
  if (limit < 2) throw ValidationError("primes_up_to: limit must be >= 2");
  if (limit > kSieveCapacity)
    throw CapacityError("primes_up_to: limit exceeds sieve capacity");

  PrimeTable t;
  t.limit = limit;
  if (limit >= 3)
    t.primes.reserve(static_cast<std::size_t>(
        1.2 * static_cast<double>(limit) / std::log(static_cast<double>(limit))));
  t.primes.push_back(2);

  if (limit <= kDenseSieveMax) {
    auto bits = odd_bits(limit);
    for (std::uint64_t n = 3; n <= limit; n += 2) {
      if ((bits[(n >> 1) >> 6] >> ((n >> 1) & 63)) & 1) t.primes.push_back(n);
    }
    return t;
  }

  // Segmented sieve: small primes to sqrt(limit), then fixed-size windows.
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  while (root * root > limit) --root;
  auto small_bits = odd_bits(root);
  std::vector<std::uint64_t> small;
  for (std::uint64_t n = 3; n <= root; n += 2) {
    if ((small_bits[(n >> 1) >> 6] >> ((n >> 1) & 63)) & 1) small.push_back(n);
  }
  for (std::uint64_t p : small) t.primes.push_back(p);

  std::vector<char> seg(kSegmentSize);
  std::uint64_t low = root + 1;
  if ((low & 1) == 0) ++low;
  for (; low <= limit; low += 2 * kSegmentSize) {
    std::uint64_t high = std::min(low + 2 * kSegmentSize - 2, limit);
    std::fill(seg.begin(), seg.end(), 1);
    for (std::uint64_t p : small) {
      std::uint64_t start = ((low + p - 1) / p) * p;
      if (start < p * p) start = p * p;
      if ((start & 1) == 0) start += p;
      for (std::uint64_t c = start; c <= high; c += 2 * p) seg[(c - low) >> 1] = 0;
    }
    for (std::uint64_t n = low; n <= high; n += 2) {
      if (seg[(n - low) >> 1]) t.primes.push_back(n);
    }
  }
  return t;
}

PrimeSet::PrimeSet(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw ValidationError("PrimeSet: limit must be >= 2");
  if (limit > kDenseSieveMax)
    throw CapacityError("PrimeSet: limit exceeds dense sieve policy");
  bits_ = odd_bits(limit);
}

}  // namespace primeplet
