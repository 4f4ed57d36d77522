#include <doctest.h>

#include "oracle_helpers.hpp"
#include "primeplet/errors.hpp"
#include "primeplet/triplet.hpp"

using namespace primeplet;

TEST_CASE("triplet classification basics") {
  Triplet t = classify_triplet(5, 7, 11);
  CHECK(t.c1 == ClassLabel::I);
  CHECK(t.c2 == ClassLabel::II);
  CHECK(outer_pair_class(t) == ClassLabel::I);
  CHECK_FALSE(t.singlet);

  t = classify_triplet(7, 11, 13);
  CHECK(t.c1 == ClassLabel::II);
  CHECK(t.c2 == ClassLabel::I);
  CHECK(outer_pair_class(t) == ClassLabel::I);

  t = classify_triplet(5, 7, 17);
  CHECK(t.c1 == ClassLabel::I);
  CHECK(t.outer == ClassLabel::III);  // (5,17) at D=6

  t = classify_triplet(3, 5, 13);
  CHECK(t.singlet);

  t = classify_triplet(7, 13, 19);
  CHECK(t.c1 == ClassLabel::I);
  CHECK(t.c2 == ClassLabel::I);
  CHECK(outer_pair_class(t) == ClassLabel::III);

  t = classify_triplet(47, 53, 59);
  CHECK(outer_pair_class(t) == ClassLabel::III);

  CHECK_THROWS_AS(classify_triplet(5, 9, 13), ValidationError);
  CHECK_THROWS_AS(classify_triplet(2, 5, 7), ValidationError);
}

TEST_CASE("composition breach is detected") {
  Triplet t = classify_triplet(5, 7, 11);
  t.outer = ClassLabel::III;  // corrupt the record
  CHECK_THROWS_AS(outer_pair_class(t), InvariantBreach);
}

TEST_CASE("enumeration matches hand lists") {
  auto ts = enumerate_triplets(1, 2, 70);
  std::vector<std::uint64_t> starts;
  for (const auto& t : ts) starts.push_back(to_u64(t.p_i));
  CHECK(starts == std::vector<std::uint64_t>{5, 11, 17, 41});
  for (const auto& t : ts) {
    CHECK(t.c1 == ClassLabel::I);
    CHECK(t.c2 == ClassLabel::II);
  }

  ts = enumerate_triplets(1, 3, 70);
  starts.clear();
  for (const auto& t : ts) starts.push_back(to_u64(t.p_i));
  CHECK(starts == std::vector<std::uint64_t>{3, 5, 11, 29, 59});
  // (3,5,11) starts at 3 but gap pair [2,6] is outside the equal-residue
  // rule (d2-d1 = 2 is not divisible by 3), so no singlet flag
  CHECK_FALSE(ts.front().singlet);

  ts = enumerate_triplets(1, 1, 100);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].p_i == 3);
  CHECK(ts[0].p_m == 5);
  CHECK(ts[0].p_f == 7);
}

TEST_CASE("singlet probes") {
  SingletProbe p = singlet_check(2, 2);
  REQUIRE(p.applicable);
  REQUIRE(p.triplet.has_value());
  CHECK(p.triplet->p_m == 7);
  CHECK(p.triplet->p_f == 11);

  p = singlet_check(5, 5);
  REQUIRE(p.triplet.has_value());
  CHECK(p.triplet->p_m == 13);
  CHECK(p.triplet->p_f == 23);

  p = singlet_check(4, 1);  // gaps [8, 2]
  REQUIRE(p.triplet.has_value());
  CHECK(p.triplet->p_m == 11);
  CHECK(p.triplet->p_f == 13);

  p = singlet_check(3, 3);
  CHECK_FALSE(p.applicable);

  // applicable but candidate composite: d1=7, d2=1 -> (3, 17, 19)? both prime
  // use d1=8, d2=2: 3 ∤ 8, 3 | (2-8), candidate (3, 19, 23): prime, prime
  p = singlet_check(8, 2);
  REQUIRE(p.applicable);
  REQUIRE(p.triplet.has_value());
  // and one that fails: d1=11, d2=2 -> candidate (3, 25, 29), 25 composite
  p = singlet_check(11, 2);
  REQUIRE(p.applicable);
  CHECK_FALSE(p.triplet.has_value());
}

TEST_CASE("witness relations and residue consequences, exhaustive to 4000") {
  std::size_t checked = 0;
  PrimeSet primes(4100);
  for (std::uint64_t d1 = 1; d1 <= 12; ++d1) {
    for (std::uint64_t d2 = 1; d2 <= 12; ++d2) {
      for (const auto& t : enumerate_triplets(d1, d2, 4000, primes)) {
        CHECK(witness_relation_holds(t));
        CHECK_NOTHROW(outer_pair_class(t));
        if (t.c1 == ClassLabel::Special || t.c2 == ClassLabel::Special) continue;
        ++checked;
        long pi6 = static_cast<long>(mpz_fdiv_ui(t.p_i.get_mpz_t(), 6));
        long pm6 = static_cast<long>(mpz_fdiv_ui(t.p_m.get_mpz_t(), 6));
        long pf6 = static_cast<long>(mpz_fdiv_ui(t.p_f.get_mpz_t(), 6));
        if (t.c1 == ClassLabel::II && t.c2 == ClassLabel::II) {
          CHECK((t.d1 + t.d2) % 6 == 0);
          CHECK(pf6 == pi6);
        }
        if (t.c2 == ClassLabel::III) CHECK(pf6 == pm6);
        if (t.c2 == ClassLabel::II) CHECK((pm6 + pf6) % 6 == 0);
        if (t.c1 == ClassLabel::III && t.c2 == ClassLabel::III) {
          CHECK(pi6 == pm6);
          CHECK(pm6 == pf6);
        }
      }
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("equal-gap rule: triplets below 10^5 with 3∤D start at 3") {
  PrimeSet primes(100100);
  for (std::uint64_t D : {1, 2, 4, 5, 7, 8}) {
    auto ts = enumerate_triplets(D, D, 100000, primes);
    CHECK(ts.size() <= 1);
    for (const auto& t : ts) CHECK(t.p_i == 3);
  }
  // 3 | D escapes the rule: [6,6] has many triplets
  auto ts = enumerate_triplets(3, 3, 100, primes);
  CHECK(ts.size() > 1);  // (5,11,17), (7,13,19), ...
}
