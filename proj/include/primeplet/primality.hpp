#pragma once

#include <cstdint>
#include <optional>

#include "primeplet/bigint.hpp"

namespace primeplet {

enum class Primality { Prime, Composite, ProbablePrime };

const char* to_string(Primality s);

/// Outcome of a primality test.
///
/// `Prime` and `Composite` are only ever produced by tests that are
/// deterministic for the operand's range:
///   - operands < 2^64: strong tests to the twelve bases 2..37, which are
///     known to be exact below 3.3e24;
///   - Mersenne numbers 2^p - 1: Lucas-Lehmer;
///   - Fermat numbers 2^(2^n) + 1: Pepin.
/// Anything larger that survives the fixed 24-base strong-probable-prime
/// battery is reported as ProbablePrime so downstream reports can flag it.
struct PrimalityVerdict {
  Primality status = Primality::Composite;
  // Small divisor found by trial division (> 1 and < operand); absent when
  // compositeness was proved without exhibiting a factor.
  std::optional<std::uint64_t> witness;

  bool is_prime() const { return status != Primality::Composite; }
  bool deterministic() const { return status != Primality::ProbablePrime; }
};

/// Fast boolean path, deterministic for the full uint64 range.
bool is_prime_u64(std::uint64_t n);

PrimalityVerdict is_prime(std::uint64_t n);
PrimalityVerdict is_prime(const Big& n);

/// Deterministic test for 2^p - 1 (any p >= 2; p need not be prime).
PrimalityVerdict lucas_lehmer(unsigned long p);

/// Deterministic test for 2^(2^n) + 1.
PrimalityVerdict pepin(unsigned long n);

}  // namespace primeplet
