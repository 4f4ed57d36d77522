#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace primeplet {

// Arbitrary-precision integer. GMP supplies the arithmetic only; all
// number-theoretic logic lives in this library.
using Big = mpz_class;

inline Big pow2(unsigned long e) {
  Big r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

/// 2^p - 1
inline Big mersenne_number(unsigned long p) { return pow2(p) - 1; }

/// 2^(2^n) + 1. Callers cap n; the operand doubles in size per step.
inline Big fermat_number(unsigned long n) { return pow2(1ul << n) + 1; }

inline std::string dec(const Big& v) { return v.get_str(10); }

inline bool fits_u64(const Big& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

/// Low 64 bits; callers check fits_u64 first.
inline std::uint64_t to_u64(const Big& v) { return mpz_get_ui(v.get_mpz_t()); }

}  // namespace primeplet
