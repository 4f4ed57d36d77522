#include <doctest.h>

#include "oracle_helpers.hpp"
#include "primeplet/errors.hpp"
#include "primeplet/primality.hpp"
#include "primeplet/sieve.hpp"

using namespace primeplet;

TEST_CASE("small verdicts and conventions") {
  CHECK(is_prime(std::uint64_t{0}).status == Primality::Composite);
  CHECK(is_prime(std::uint64_t{1}).status == Primality::Composite);
  CHECK_FALSE(is_prime(std::uint64_t{1}).witness.has_value());
  CHECK(is_prime(std::uint64_t{2}).status == Primality::Prime);
  CHECK(is_prime(Big(-7)).status == Primality::Composite);

  // 7919 is the 1000th prime
  auto ps = oracle::sieve(8000);
  REQUIRE(ps.size() >= 1000);
  CHECK(ps[999] == 7919);
  CHECK(is_prime(std::uint64_t{7919}).status == Primality::Prime);
  CHECK(is_prime(Big(8191)).status == Primality::Prime);  // 2^13 - 1
}

TEST_CASE("witnesses divide the operand") {
  auto v = is_prime(std::uint64_t{7918});
  REQUIRE(v.status == Primality::Composite);
  REQUIRE(v.witness.has_value());
  CHECK(7918 % *v.witness == 0);
  CHECK(*v.witness > 1);
  CHECK(*v.witness < 7918);

  Big n = mersenne_number(29);  // 233 * 1103 * 2089
  auto bv = is_prime(n);
  REQUIRE(bv.status == Primality::Composite);
  REQUIRE(bv.witness.has_value());
  CHECK(n % *bv.witness == 0);

  auto mv = is_prime(pow2(70) * 3 + 3);
  REQUIRE(mv.status == Primality::Composite);
  REQUIRE(mv.witness.has_value());
  CHECK(*mv.witness == 3);
}

TEST_CASE("agreement with sieve membership up to 2*10^5") {
  PrimeTable table = primes_up_to(200000);
  std::size_t idx = 0;
  for (std::uint64_t n = 0; n <= 200000; ++n) {
    bool in_table = idx < table.primes.size() && table.primes[idx] == n;
    if (in_table) ++idx;
    CHECK(is_prime_u64(n) == in_table);
  }
}

TEST_CASE("pi(10^6) and table invariants") {
  PrimeTable t = primes_up_to(1000000);
  CHECK(t.primes.size() == 78498);
  CHECK(t.primes.front() == 2);
  CHECK(t.primes.back() == 999983);
  for (std::size_t i = 1; i < t.primes.size(); i += 997)
    CHECK(t.primes[i - 1] < t.primes[i]);
  CHECK(t.contains(999983));
  CHECK_FALSE(t.contains(999981));

  CHECK(primes_up_to(10).primes == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_up_to(30).primes ==
        std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK_THROWS_AS(primes_up_to(1), ValidationError);
  CHECK_THROWS_AS(primes_up_to(kSieveCapacity + 1), CapacityError);
}

TEST_CASE("segmented path above the dense threshold") {
  // 100000019 forces the segmented sieve; pi(10^8) = 5761455
  PrimeTable t = primes_up_to(100000019);
  std::size_t below_1e8 = 0;
  for (auto p : t.primes) {
    if (p <= 100000000) ++below_1e8;
  }
  CHECK(below_1e8 == 5761455);
  CHECK(t.primes.back() == 100000007);
  // agree with the dense sieve on a shared prefix
  PrimeTable dense = primes_up_to(3000000);
  CHECK(std::equal(dense.primes.begin(), dense.primes.end(), t.primes.begin()));
  // and with per-number tests across the dense/segmented seam
  auto it = std::lower_bound(t.primes.begin(), t.primes.end(), 99999000ull);
  for (std::uint64_t n = 99999000; n <= 100000019; ++n) {
    bool in_table = it != t.primes.end() && *it == n;
    if (in_table) ++it;
    CHECK(is_prime_u64(n) == in_table);
  }
}

TEST_CASE("segmented sieve agrees with dense sieve") {
  // force the segmented path by sieving past the dense threshold is too
  // slow for a unit test; instead compare the two code paths indirectly:
  // primes in a window counted by PrimeSet vs PrimeTable
  PrimeTable t = primes_up_to(3000000);
  PrimeSet s(3000000);
  std::size_t n_set = 0;
  for (std::uint64_t v = 2; v <= 3000000; ++v)
    if (s.contains(v)) ++n_set;
  CHECK(n_set == t.primes.size());
}

TEST_CASE("deterministic below 2^64, probable above") {
  // within the deterministic range nothing is ever ProbablePrime
  for (std::uint64_t n : {4294967291ull, 4294967295ull, 18446744073709551557ull}) {
    auto v = is_prime(n);
    CHECK(v.deterministic());
  }
  // 2^89 - 1 is prime but larger than 2^64: battery reports probable
  auto v89 = is_prime(mersenne_number(89));
  CHECK(v89.status == Primality::ProbablePrime);
  // while Lucas-Lehmer decides it
  CHECK(lucas_lehmer(89).status == Primality::Prime);
}

TEST_CASE("Lucas-Lehmer against the known exponent list") {
  std::vector<unsigned long> mersenne_exponents = {2,  3,  5,  7,  13, 17,
                                                   19, 31, 61, 89, 107, 127};
  for (unsigned long p = 2; p <= 130; ++p) {
    bool expect = std::find(mersenne_exponents.begin(), mersenne_exponents.end(),
                            p) != mersenne_exponents.end();
    CHECK(lucas_lehmer(p).is_prime() == expect);
  }
}

TEST_CASE("Pepin against the known Fermat primes") {
  for (unsigned long n = 0; n <= 8; ++n) {
    CHECK(pepin(n).is_prime() == (n <= 4));
    CHECK(pepin(n).deterministic());
  }
}

TEST_CASE("battery verdicts for big operands") {
  // 2^89 + 1 is divisible by 3 (2^odd ≡ 2 mod 3)
  auto v = is_prime(mersenne_number(89) + 2);
  CHECK(v.status == Primality::Composite);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == 3);
  // M107 and M127 survive the battery, M101 = 7432339208719 * ... does not
  CHECK(is_prime(mersenne_number(107)).status == Primality::ProbablePrime);
  CHECK(is_prime(mersenne_number(127)).status == Primality::ProbablePrime);
  CHECK(is_prime(mersenne_number(101)).status == Primality::Composite);
}
