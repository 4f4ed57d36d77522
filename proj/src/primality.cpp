#include "primeplet/primality.hpp"

#include <array>

#include "primeplet/errors.hpp"

namespace primeplet {

namespace {

// Bases proven sufficient for all n < 3.3e24 (covers the full uint64 range).
constexpr std::array<std::uint64_t, 12> kDeterministicBases = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Fixed battery for operands >= 2^64: strong tests to the first 24 primes.
constexpr std::array<std::uint64_t, 24> kBatteryBases = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
    41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

// Trial-division bound; factors found below it become Composite witnesses.
constexpr std::uint64_t kTrialBound = 10'000;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Strong test: true = "strong probable prime to base a".
bool sprp_u64(std::uint64_t n, std::uint64_t a) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool sprp_big(const Big& n, std::uint64_t base) {
  Big a(static_cast<unsigned long>(base));
  a %= n;
  if (sgn(a) == 0) return true;
  Big d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Big x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  Big nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == nm1) return true;
  }
  return false;
}

}  // namespace

const char* to_string(Primality s) {
  switch (s) {
    case Primality::Prime: return "prime";
    case Primality::Composite: return "composite";
    case Primality::ProbablePrime: return "probable-prime";
  }
  return "?";
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  for (std::uint64_t a : kDeterministicBases) {
    if (!sprp_u64(n, a)) return false;
  }
  return true;
}

PrimalityVerdict is_prime(std::uint64_t n) {
  if (n < 2) return {Primality::Composite, std::nullopt};
  for (std::uint64_t p = 2; p < kTrialBound && p * p <= n; p = (p == 2 ? 3 : p + 2)) {
    if (n % p == 0) {
      if (n == p) return {Primality::Prime, std::nullopt};
      return {Primality::Composite, p};
    }
  }
  if (n < kTrialBound * kTrialBound) return {Primality::Prime, std::nullopt};
  for (std::uint64_t a : kDeterministicBases) {
    if (!sprp_u64(n, a)) return {Primality::Composite, std::nullopt};
  }
  return {Primality::Prime, std::nullopt};
}

PrimalityVerdict is_prime(const Big& n) {
  if (n < 2) return {Primality::Composite, std::nullopt};
  if (fits_u64(n)) return is_prime(to_u64(n));
  // Operand >= 2^64: trial-divide for a small witness, then the battery.
  for (std::uint64_t p = 3; p < kTrialBound; p += 2) {
    if (!is_prime_u64(p)) continue;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      return {Primality::Composite, p};
    }
  }
  for (std::uint64_t a : kBatteryBases) {
    if (!sprp_big(n, a)) return {Primality::Composite, std::nullopt};
  }
  return {Primality::ProbablePrime, std::nullopt};
}

PrimalityVerdict lucas_lehmer(unsigned long p) {
  if (p < 2) throw ValidationError("lucas_lehmer: exponent must be >= 2");
  if (p == 2) return {Primality::Prime, std::nullopt};  // M2 = 3
  if (!is_prime_u64(p)) {
    // 2^ab - 1 is divisible by 2^a - 1; surface the witness when it is small.
    for (unsigned long d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        std::optional<std::uint64_t> w;
        if (d < 64) w = (std::uint64_t{1} << d) - 1;
        return {Primality::Composite, w};
      }
    }
    return {Primality::Composite, std::nullopt};
  }
  const Big m = mersenne_number(p);
  Big s = 4;
  for (unsigned long i = 0; i + 2 < p; ++i) {
    s = s * s - 2;
    // reduce mod 2^p - 1 via shift/add
    while (mpz_sizeinbase(s.get_mpz_t(), 2) > p) {
      Big lo;
      mpz_fdiv_r_2exp(lo.get_mpz_t(), s.get_mpz_t(), p);
      mpz_fdiv_q_2exp(s.get_mpz_t(), s.get_mpz_t(), p);
      s += lo;
    }
    if (s == m) s = 0;
  }
  return {sgn(s) == 0 ? Primality::Prime : Primality::Composite, std::nullopt};
}

PrimalityVerdict pepin(unsigned long n) {
  if (n == 0) return {Primality::Prime, std::nullopt};  // F0 = 3
  const Big f = fermat_number(n);
  Big e = (f - 1) / 2;
  Big x;
  Big three = 3;
  mpz_powm(x.get_mpz_t(), three.get_mpz_t(), e.get_mpz_t(), f.get_mpz_t());
  return {x == f - 1 ? Primality::Prime : Primality::Composite, std::nullopt};
}

}  // namespace primeplet
