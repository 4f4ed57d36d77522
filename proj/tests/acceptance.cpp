// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every comparison is exact integer arithmetic.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "primeplet/claims.hpp"
#include "primeplet/emit.hpp"
#include "primeplet/errors.hpp"

using namespace primeplet;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome claims_pass(const std::vector<std::string>& prefixes) {
  std::size_t total = 0, failed = 0;
  std::string first_fail;
  for (const auto& prefix : prefixes) {
    for (const auto& rec : run_claims(prefix)) {
      ++total;
      if (rec.status != ClaimRecord::Status::Pass) {
        ++failed;
        if (first_fail.empty()) first_fail = rec.claim_id;
      }
    }
  }
  Outcome o;
  o.pass = total > 0 && failed == 0;
  std::ostringstream os;
  os << total - failed << "/" << total << " claims";
  if (failed) os << " (first failure: " << first_fail << ")";
  o.detail = os.str();
  return o;
}

// criterion 1: every prime pair (p, p+2D), 3 < p, p+2D <= 10^6, D <= 50 gets
// exactly one class with a valid witness; predicted mod-6 residues match.
Outcome twin_exhaustive_audit() {
  const std::uint64_t limit = 1000000;
  PrimeSet primes(limit);
  std::uint64_t pairs = 0, violations = 0;
  for (std::uint64_t p = 5; p <= limit; p += 2) {
    if (!primes.contains(p)) continue;
    for (std::uint64_t D = 1; D <= 50; ++D) {
      std::uint64_t q = p + 2 * D;
      if (q > limit) break;
      if (!primes.contains(q)) continue;
      ++pairs;
      TwinPair t = classify_twin_unchecked(p, q);
      bool ok = true;
      switch (t.label) {
        case ClassLabel::I:
          ok = t.D % 2 == 1 && t.p_i == 2 * t.a - t.D && t.p_f == 2 * t.a + t.D;
          break;
        case ClassLabel::II:
          ok = t.D % 2 == 0 && t.D % 3 != 0 &&
               t.p_i == 3 * (2 * t.a - 1) - t.D && t.p_f == 3 * (2 * t.a - 1) + t.D;
          break;
        case ClassLabel::III:
          ok = t.D % 6 == 0 && t.p_i == 2 * t.a + 1 - t.D &&
               t.p_f == 2 * t.a + 1 + t.D;
          break;
        case ClassLabel::Special:
          ok = false;  // impossible for p > 3
          break;
      }
      ResidueSignature s = residue_signature(t);
      ok = ok && s.pi_mod6 == (p % 6 == 1 ? 1 : -1) &&
           s.pf_mod6 == (q % 6 == 1 ? 1 : -1);
      if (!ok) ++violations;
    }
  }
  Outcome o;
  o.pass = violations == 0 && pairs > 500000;
  o.detail = std::to_string(pairs) + " pairs audited, " +
             std::to_string(violations) + " violations";
  return o;
}

// criterion 4: all triplets <= 10^5 with d1+d2 <= 30 obey the composition laws.
Outcome triplet_composition_audit() {
  const std::uint64_t limit = 100000;
  PrimeSet primes(limit);
  std::uint64_t count = 0, violations = 0;
  for (std::uint64_t d1 = 1; d1 < 30; ++d1) {
    for (std::uint64_t d2 = 1; d1 + d2 <= 30; ++d2) {
      for (std::uint64_t p = 3; p + 2 * (d1 + d2) <= limit; p += 2) {
        if (!primes.contains(p) || !primes.contains(p + 2 * d1) ||
            !primes.contains(p + 2 * (d1 + d2)))
          continue;
        ++count;
        Triplet t = classify_triplet_unchecked(p, p + 2 * d1, p + 2 * (d1 + d2));
        try {
          outer_pair_class(t);
        } catch (const InvariantBreach&) {
          ++violations;
        }
        if (!witness_relation_holds(t)) ++violations;
        // equal-residue gap pairs admit only the triplet from 3
        if (d1 % 3 != 0 && d1 % 3 == d2 % 3 && p != 3) ++violations;
      }
    }
  }
  Outcome o;
  o.pass = violations == 0 && count > 100000;
  o.detail = std::to_string(count) + " triplets audited, " +
             std::to_string(violations) + " violations";
  return o;
}

// criterion 10a: census vs a naive per-start trial-division oracle.
Outcome census_oracle_equivalence() {
  const std::uint64_t limit = 100000;
  auto fast = find_regular(5, limit);
  std::ostringstream lhs;
  for (const auto& m : fast) lhs << m.start << ":" << m.length << ",";

  std::ostringstream rhs;
  auto trial_prime = [](std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t s = 2; s <= limit; ++s) {
    if (!trial_prime(s)) continue;
    std::uint64_t n = 0;
    while (trial_prime(s + n * (n + 1))) ++n;
    if (n >= 5) rhs << s << ":" << n << ",";
  }
  Outcome o;
  o.pass = lhs.str() == rhs.str() && !fast.empty();
  o.detail = "census strings " + std::string(o.pass ? "identical" : "differ") +
             " (" + std::to_string(fast.size()) + " runs)";
  return o;
}

// criterion 10b: coefficient-box search vs naive enumeration.
Outcome search_oracle_equivalence() {
  auto trial_prime = [](std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  };
  bool all_equal = true;
  std::size_t boxes = 0;
  for (std::uint64_t p0 : {5ull, 7ull, 13ull}) {
    SearchConstraint c;
    c.p0 = p0;
    c.degree = 2;
    c.lead_lo = 1;
    c.lead_hi = 2;
    c.mid_lo = -5;
    c.mid_hi = 5;
    c.require = Requirement::RunAtLeast;
    c.min_run = 2;
    auto fast = search_polys(c);
    std::ostringstream lhs;
    for (const auto& h : fast)
      lhs << h.poly.coeffs[2] << "x2" << h.poly.coeffs[1] << "x" << h.poly.coeffs[0]
          << "=" << h.run_length << ";";

    struct Row {
      std::uint64_t run;
      std::int64_t a, b, c0;
    };
    std::vector<Row> naive;
    for (std::int64_t a = 1; a <= 2; ++a) {
      for (std::int64_t c0 :
           {static_cast<std::int64_t>(p0), -static_cast<std::int64_t>(p0)}) {
        for (std::int64_t b = -5; b <= 5; ++b) {
          std::uint64_t run = 0;
          for (std::int64_t j = 0;; ++j) {
            std::int64_t v = a * j * j + b * j + c0;
            std::uint64_t av = static_cast<std::uint64_t>(v < 0 ? -v : v);
            if (av < 2 || !trial_prime(av)) break;
            ++run;
          }
          if (run >= 2) naive.push_back({run, a, b, c0});
        }
      }
    }
    std::stable_sort(naive.begin(), naive.end(), [](const Row& x, const Row& y) {
      if (x.run != y.run) return x.run > y.run;
      if (x.a != y.a) return x.a < y.a;
      if (x.b != y.b) return x.b < y.b;
      return x.c0 < y.c0;
    });
    std::ostringstream rhs;
    for (const auto& r : naive)
      rhs << r.a << "x2" << r.b << "x" << r.c0 << "=" << r.run << ";";
    all_equal = all_equal && lhs.str() == rhs.str();
    ++boxes;
  }
  Outcome o;
  o.pass = all_equal && boxes == 3;
  o.detail = std::string(all_equal ? "identical" : "differ") + " across " +
             std::to_string(boxes) + " boxes";
  return o;
}

// criterion 10c: is_prime agrees with sieve membership to 10^6, byte-compared.
Outcome primality_oracle_equivalence() {
  PrimeTable table = primes_up_to(1000000);
  std::ostringstream lhs;
  for (auto p : table.primes) lhs << p << ",";
  std::ostringstream rhs;
  for (std::uint64_t n = 0; n <= 1000000; ++n) {
    if (is_prime(n).status == Primality::Prime) rhs << n << ",";
  }
  Outcome o;
  o.pass = lhs.str() == rhs.str();
  o.detail = std::string(o.pass ? "identical" : "differ") + " (" +
             std::to_string(table.primes.size()) + " primes)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "twin classification exhaustive audit (10^6, D <= 50)",
       twin_exhaustive_audit},
      {2, "witness sequence regressions",
       [] { return claims_pass({"Ex1-"}); }},
      {3, "equal-gap singlet audit to 10^6 and singlet values",
       [] { return claims_pass({"Thm2.4-i-", "Thm2.4-ii-", "Sing-"}); }},
      {4, "triplet composition laws (10^5, d1+d2 <= 30)",
       triplet_composition_audit},
      {5, "divisibility guards (p <= 1000, n <= 8)",
       [] { return claims_pass({"Guard-"}); }},
      {6, "Mersenne/Fermat scan and uniqueness regressions",
       [] {
         return claims_pass({"Ex4-", "Ex5-", "Ex6-", "Ex7-", "Ex8-", "Ex9-",
                             "Ex10-", "Ex11-", "Cor3.", "Prop3.4"});
       }},
      {7, "regular multiplet census",
       [] { return claims_pass({"Ex12-"}); }},
      {8, "quadratic family evaluations",
       [] { return claims_pass({"Fam-", "Thm4.1vi-"}); }},
      {9, "polynomial lab regressions",
       [] { return claims_pass({"Poly-", "Shift-", "Search-"}); }},
      {10, "oracle equivalence (census, search, primality)",
       [] {
         Outcome a = census_oracle_equivalence();
         Outcome b = search_oracle_equivalence();
         Outcome c = primality_oracle_equivalence();
         Outcome o;
         o.pass = a.pass && b.pass && c.pass;
         o.detail = "census: " + a.detail + "; search: " + b.detail +
                    "; primality: " + c.detail;
         return o;
       }},
      {11, "open-question probes run to completion",
       [] { return claims_pass({"OQ-"}); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    std::printf("%s criterion %2d: %s — %s (%.1fs)\n", o.pass ? "PASS" : "FAIL",
                c.number, c.name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
