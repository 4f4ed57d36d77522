#include "primeplet/polylab.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "primeplet/errors.hpp"
#include "primeplet/primality.hpp"

namespace primeplet {

namespace {

std::int64_t checked(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw CapacityError(std::string(what) + ": value outside 64-bit range");
  return static_cast<std::int64_t>(v);
}

bool abs_prime(std::int64_t v) {
  std::uint64_t a = v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
  return a >= 2 && is_prime_u64(a);
}

}  // namespace

std::int64_t PolySpec::eval(std::int64_t x) const {
  __int128 r = 0;
  for (int k = degree; k >= 0; --k) {
    r = r * x + coeffs[k];
    if (r > __int128(INT64_MAX) * 4 || r < __int128(INT64_MIN) * 4)
      throw CapacityError("poly eval overflow");
  }
  return checked(r, "poly eval");
}

std::string PolySpec::text() const {
  std::ostringstream os;
  bool first = true;
  for (int k = degree; k >= 0; --k) {
    std::int64_t c = coeffs[k];
    if (c == 0 && (k != 0 || !first)) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? "-" : "+");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (k == 0 || a != 1) os << a;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

PolySpec poly_from_coeffs(const std::vector<std::int64_t>& high_to_low) {
  if (high_to_low.size() < 2 || high_to_low.size() > 4)
    throw ValidationError("polynomial must have degree 1..3");
  if (high_to_low.front() == 0)
    throw ValidationError("leading coefficient must be nonzero");
  PolySpec p;
  p.degree = static_cast<int>(high_to_low.size()) - 1;
  for (std::size_t i = 0; i < high_to_low.size(); ++i)
    p.coeffs[high_to_low.size() - 1 - i] = high_to_low[i];
  return p;
}

// P(j+1) - P(j), rendered as a polynomial in j. The run's members form a
// multiplet under this law (2j+2 for the monic x^2+x+p shape).
std::string difference_law(const PolySpec& p) {
  const auto& c = p.coeffs;
  // coefficients of the difference polynomial, low to high
  std::int64_t d0 = c[1] + c[2] + c[3];
  std::int64_t d1 = 2 * c[2] + 3 * c[3];
  std::int64_t d2 = 3 * c[3];
  PolySpec diff;
  diff.degree = d2 != 0 ? 2 : (d1 != 0 ? 1 : 0);
  diff.coeffs = {d0, d1, d2, 0};
  std::string s = diff.text();
  for (auto& ch : s) {
    if (ch == 'x') ch = 'j';
  }
  return s;
}

PrimeRunReport prime_run(const PolySpec& poly) {
  if (poly.p0() < 2)
    throw ValidationError("prime_run: |P(0)| must be >= 2");
  PrimeRunReport rep;
  rep.poly = poly;
  rep.distance_law = difference_law(poly);

  std::int64_t j = 0;
  for (;;) {
    std::int64_t v = poly.eval(j);
    if (!abs_prime(v)) break;
    rep.values.push_back(v);
    ++j;
  }
  rep.run_length = static_cast<std::uint64_t>(j);
  rep.window_hi = j - 1;
  std::int64_t lo = 0;
  while (rep.run_length > 0 && abs_prime(poly.eval(lo - 1))) --lo;
  rep.window_lo = lo;

  const std::uint64_t p0 = poly.p0();
  rep.optimal = is_prime_u64(p0) && rep.run_length >= p0;
  rep.near_optimal = rep.run_length + 1 == p0;
  rep.bioptimal = rep.optimal && rep.window_lo <= 1 - static_cast<std::int64_t>(p0);

  std::set<std::uint64_t> seen;
  std::int64_t prev = 0;
  for (std::size_t i = 0; i < rep.values.size(); ++i) {
    std::int64_t v = rep.values[i];
    std::uint64_t a = v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
    if (!seen.insert(a).second) rep.repeating = true;
    if (v < 0) rep.negative_hit = true;
    if (i > 0 && v <= prev) rep.ascending = false;
    prev = v;
  }
  if (rep.values.empty()) rep.ascending = false;
  return rep;
}

PrimeRunReport is_bioptimal(const PolySpec& poly) { return prime_run(poly); }

PolySpec shift_poly(const PolySpec& poly, std::int64_t n) {
  if (poly.degree > 3) throw ValidationError("shift_poly: degree must be <= 3");
  // binomial expansion of sum c_k (x-n)^k
  const auto& c = poly.coeffs;
  __int128 n2 = __int128(n) * n;
  __int128 b0 = c[0] - __int128(c[1]) * n + __int128(c[2]) * n2 - __int128(c[3]) * n2 * n;
  __int128 b1 = c[1] - 2 * __int128(c[2]) * n + 3 * __int128(c[3]) * n2;
  __int128 b2 = c[2] - 3 * __int128(c[3]) * n;
  __int128 b3 = c[3];
  PolySpec out;
  out.degree = poly.degree;
  out.coeffs = {checked(b0, "shift"), checked(b1, "shift"), checked(b2, "shift"),
                checked(b3, "shift")};
  return out;
}

PolySpec construct_family(PolyFamily kind, std::int64_t p1, std::int64_t p2,
                          std::int64_t m) {
  auto prime64 = [](std::int64_t v) {
    return v >= 2 && is_prime_u64(static_cast<std::uint64_t>(v));
  };
  PolySpec out;
  switch (kind) {
    case PolyFamily::Q1:
      if (!prime64(p1)) throw ValidationError("Q1: p1 must be prime");
      out.degree = 2;
      out.coeffs = {2, p1 - 3, 1, 0};
      break;
    case PolyFamily::C1:
      if (!prime64(p1)) throw ValidationError("C1: p1 must be prime");
      out.degree = 3;
      out.coeffs = {2, p1 - 3 - m, m, 1};
      break;
    case PolyFamily::C2: {
      if (!prime64(p1) || !prime64(p2))
        throw ValidationError("C2: p1 and p2 must be prime");
      if (p2 % 2 == 0)
        throw ValidationError("C2: p2 must be odd (integer coefficients)");
      out.degree = 3;
      out.coeffs = {3, 2 * p1 - (p2 + 5) / 2, (p2 - 3) / 2 - p1, 1};
      break;
    }
  }
  // the anchor values are part of the contract; recheck them numerically
  if (out.eval(1) != p1) throw InvariantBreach("construct_family: P(1) != p1");
  if (kind == PolyFamily::C2 && out.eval(2) != p2)
    throw InvariantBreach("construct_family: P(2) != p2");
  return out;
}

std::uint64_t search_box_budget() {
  if (const char* s = std::getenv("PRIMEPLET_MAX_BOX")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

std::uint64_t search_box_size(const SearchConstraint& c) {
  if (c.lead_hi < c.lead_lo || c.mid_hi < c.mid_lo) return 0;
  std::uint64_t leads = static_cast<std::uint64_t>(c.lead_hi - c.lead_lo + 1);
  std::uint64_t mids = static_cast<std::uint64_t>(c.mid_hi - c.mid_lo + 1);
  std::uint64_t box = leads * 2;  // two constant signs
  for (int i = 0; i < c.degree - 1; ++i) box *= mids;
  return box;
}

std::vector<PrimeRunReport> search_polys(const SearchConstraint& c) {
  if (c.degree != 2 && c.degree != 3)
    throw ValidationError("search_polys: degree must be 2 or 3");
  if (!is_prime_u64(c.p0)) throw ValidationError("search_polys: p0 must be prime");
  if (c.lead_hi < c.lead_lo || c.mid_hi < c.mid_lo)
    throw ValidationError("search_polys: empty coefficient ranges");
  if (search_box_size(c) > search_box_budget())
    throw CapacityError("search_polys: box exceeds PRIMEPLET_MAX_BOX budget");

  const std::int64_t p0 = static_cast<std::int64_t>(c.p0);
  std::vector<PrimeRunReport> hits;
  auto consider = [&](const PolySpec& poly) {
    PrimeRunReport rep = prime_run(poly);
    bool keep = false;
    switch (c.require) {
      case Requirement::Optimal: keep = rep.optimal; break;
      case Requirement::RunAtLeast: keep = rep.run_length >= c.min_run; break;
      case Requirement::BiOptimal: keep = rep.bioptimal; break;
    }
    if (keep) hits.push_back(std::move(rep));
  };

  for (std::int64_t lead = c.lead_lo; lead <= c.lead_hi; ++lead) {
    if (lead == 0) continue;
    for (std::int64_t c0 : {p0, -p0}) {
      if (c.degree == 2) {
        for (std::int64_t b = c.mid_lo; b <= c.mid_hi; ++b) {
          PolySpec poly;
          poly.degree = 2;
          poly.coeffs = {c0, b, lead, 0};
          consider(poly);
        }
      } else {
        for (std::int64_t b = c.mid_lo; b <= c.mid_hi; ++b) {
          for (std::int64_t d = c.mid_lo; d <= c.mid_hi; ++d) {
            PolySpec poly;
            poly.degree = 3;
            poly.coeffs = {c0, d, b, lead};
            consider(poly);
          }
        }
      }
    }
  }
  std::stable_sort(hits.begin(), hits.end(), [](const auto& x, const auto& y) {
    if (x.run_length != y.run_length) return x.run_length > y.run_length;
    for (int k = x.poly.degree; k >= 0; --k) {
      if (x.poly.coeffs[k] != y.poly.coeffs[k]) return x.poly.coeffs[k] < y.poly.coeffs[k];
    }
    return false;
  });
  return hits;
}

}  // namespace primeplet
