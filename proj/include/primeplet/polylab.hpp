#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace primeplet {

// Integer polynomial of degree 1..3. coeffs[k] multiplies x^k; the leading
// coefficient is nonzero. |P(0)| = p0; when p0 is prime, p0 | P(p0), so a
// consecutive prime run from 0 cannot pass p0 unless |P(p0)| = p0 itself.
struct PolySpec {
  int degree = 1;
  std::array<std::int64_t, 4> coeffs = {0, 0, 0, 0};

  std::uint64_t p0() const {
    return static_cast<std::uint64_t>(coeffs[0] < 0 ? -coeffs[0] : coeffs[0]);
  }
  std::int64_t leading() const { return coeffs[degree]; }
  /// P(x); throws CapacityError if the value leaves the int64 range.
  std::int64_t eval(std::int64_t x) const;
  std::string text() const;  // e.g. "x^2-3x+13"

  bool operator==(const PolySpec&) const = default;
};

/// Build from CLI order (highest degree first). ValidationError on empty
/// list, degree > 3, or zero leading coefficient.
PolySpec poly_from_coeffs(const std::vector<std::int64_t>& high_to_low);

struct PrimeRunReport {
  PolySpec poly;
  std::uint64_t run_length = 0;        // max L with |P(0..L-1)| all prime
  std::vector<std::int64_t> values;    // P(0..L-1), signed
  bool optimal = false;                // p0 prime and run_length >= p0
  bool near_optimal = false;           // run_length == p0 - 1
  bool bioptimal = false;              // |P(j)| prime on [1-p0, p0-1]
  bool repeating = false;              // some |value| occurs twice in the run
  bool ascending = true;               // values strictly increasing
  bool negative_hit = false;           // some P(j) < 0 in the run
  std::int64_t window_lo = 0, window_hi = -1;  // maximal prime window around 0
  std::string distance_law;            // P(j+1)-P(j) as a polynomial in j
};

/// Runs stop at the first j >= 0 with |P(j)| in {0,1} or composite.
/// window_[lo,hi] extends the run to negative j the same way.
/// ValidationError when |P(0)| < 2.
PrimeRunReport prime_run(const PolySpec& poly);

/// prime_run with the bi-optimality window evaluated (kept as a separate
/// entry point mirroring the report consumers; same report type).
PrimeRunReport is_bioptimal(const PolySpec& poly);

/// P(x - n), expanded.
PolySpec shift_poly(const PolySpec& poly, std::int64_t n);

// Constructive families: Q1(x) = x^2+(p1-3)x+2;
// C1(x) = x^3+mx^2+(p1-3-m)x+2; C2 is the cubic with C2(0)=3, C2(1)=p1,
// C2(2)=p2 (p2 must be odd for integer coefficients).
enum class PolyFamily { Q1, C1, C2 };

PolySpec construct_family(PolyFamily kind, std::int64_t p1, std::int64_t p2 = 0,
                          std::int64_t m = 0);

enum class Requirement { Optimal, RunAtLeast, BiOptimal };

struct SearchConstraint {
  std::uint64_t p0 = 2;  // prime; the constant coefficient is +/- p0
  int degree = 2;        // 2 or 3
  std::int64_t lead_lo = 1, lead_hi = 1;
  std::int64_t mid_lo = 0, mid_hi = 0;  // all non-leading, non-constant coeffs
  Requirement require = Requirement::Optimal;
  std::uint64_t min_run = 0;  // for RunAtLeast
};

/// Exhaustive over the box, deterministic order: results sorted by
/// (run_length desc, coefficients lexicographic ascending high-to-low).
/// The box size is capped by PRIMEPLET_MAX_BOX (env, default 10^7).
std::vector<PrimeRunReport> search_polys(const SearchConstraint& c);

std::uint64_t search_box_size(const SearchConstraint& c);
std::uint64_t search_box_budget();

}  // namespace primeplet
