#include "primeplet/multiplet.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <memory>
#include <sstream>

#include "primeplet/errors.hpp"
#include "primeplet/primality.hpp"
#include "primeplet/sieve.hpp"

namespace primeplet {

namespace {

RegularMultiplet extend_from(std::uint64_t start) {
  RegularMultiplet m;
  m.start = start;
  std::uint64_t n = 0;
  for (;;) {
    std::uint64_t v = start + n * (n + 1);
    if (!is_prime_u64(v)) break;
    m.members.push_back(v);
    ++n;
  }
  m.length = n;
  m.maximal = true;
  const auto& euler = family_params_E();
  if (m.length + 1 == start &&
      std::find(euler.begin(), euler.end(), start) != euler.end()) {
    m.family = "E";
  }
  return m;
}

std::vector<RegularMultiplet> find_regular_range(std::uint64_t min_length,
                                                 std::uint64_t lo, std::uint64_t hi,
                                                 const PrimeSet* primes) {
  std::vector<RegularMultiplet> out;
  for (std::uint64_t s = lo | 1; s <= hi; s += 2) {
    if (primes ? !primes->contains(s) : !is_prime_u64(s)) continue;
    // cheap pre-filter: a run of length >= 2 needs s+2 prime
    if (min_length >= 2 && !is_prime_u64(s + 2)) continue;
    RegularMultiplet m = extend_from(s);
    if (m.length >= min_length) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

RegularMultiplet extend_regular(std::uint64_t start) {
  if (!is_prime_u64(start))
    throw ValidationError("extend_regular: start must be prime");
  return extend_from(start);
}

std::vector<RegularMultiplet> find_regular(std::uint64_t min_length,
                                           std::uint64_t limit, unsigned threads) {
  if (min_length < 2) throw ValidationError("find_regular: min_length must be >= 2");
  if (limit < 2) throw ValidationError("find_regular: limit must be >= 2");
  if (limit > kSieveCapacity)
    throw CapacityError("find_regular: limit exceeds the single-node policy");
  // membership bitset below the dense-sieve cap, direct tests above
  std::unique_ptr<PrimeSet> set;
  if (limit <= kDenseSieveMax) set = std::make_unique<PrimeSet>(limit);
  const PrimeSet* primes = set.get();

  // start = 2 never extends (2+2 = 4), so odd starts suffice.
  std::vector<RegularMultiplet> out;
  if (threads <= 1) {
    out = find_regular_range(min_length, 3, limit, primes);
  } else {
    std::uint64_t chunk = (limit + threads - 1) / threads;
    std::vector<std::future<std::vector<RegularMultiplet>>> parts;
    for (unsigned t = 0; t < threads; ++t) {
      std::uint64_t lo = std::max<std::uint64_t>(3, t * chunk);
      std::uint64_t hi = std::min(limit, (t + 1) * chunk - 1);
      if (lo > hi) continue;
      parts.push_back(std::async(std::launch::async, [=] {
        return find_regular_range(min_length, lo, hi, primes);
      }));
    }
    for (auto& f : parts) {
      auto part = f.get();
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.start < y.start; });
  }
  return out;
}

std::vector<AlmostRegularMultiplet> find_almost_regular(std::uint64_t min_length,
                                                        std::uint64_t limit,
                                                        std::uint64_t max_missing) {
  if (max_missing > 2)
    throw ValidationError("find_almost_regular: max_missing must be <= 2");
  if (min_length < 2)
    throw ValidationError("find_almost_regular: min_length must be >= 2");
  PrimeSet primes(limit);

  std::vector<AlmostRegularMultiplet> out;
  for (std::uint64_t s = 3; s <= limit; s += 2) {
    // origin is either prime, or composite with position 0 counted missing
    bool origin_prime = primes.contains(s);
    if (!origin_prime && max_missing == 0) continue;

    AlmostRegularMultiplet m;
    m.start = s;
    std::uint64_t misses = 0, n = 0;
    std::uint64_t last_prime_pos = 0;
    bool any_prime = false;
    for (;;) {
      std::uint64_t v = s + n * (n + 1);
      if (is_prime_u64(v)) {
        any_prime = true;
        last_prime_pos = n;
      } else {
        if (misses == max_missing) break;
        ++misses;
        m.missing_indices.push_back(n);
      }
      ++n;
    }
    if (!any_prime) continue;
    // trim trailing missing positions
    while (!m.missing_indices.empty() && m.missing_indices.back() > last_prime_pos)
      m.missing_indices.pop_back();
    m.span = last_prime_pos + 1;
    if (m.span < min_length) continue;
    for (std::uint64_t i = 0; i < m.span; ++i) {
      std::uint64_t v = s + i * (i + 1);
      if (is_prime_u64(v)) m.members.push_back(v);
    }
    out.push_back(std::move(m));
  }
  return out;
}

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::E: return "E";
    case FamilyKind::f: return "f";
    case FamilyKind::F: return "F";
    case FamilyKind::G: return "G";
    case FamilyKind::g: return "g";
  }
  return "?";
}

const std::vector<std::uint64_t>& family_params_E() {
  static const std::vector<std::uint64_t> v = {2, 3, 5, 11, 17, 41};
  return v;
}
const std::vector<std::uint64_t>& family_params_f() {
  static const std::vector<std::uint64_t> v = {3, 5, 11, 29};
  return v;
}
const std::vector<std::uint64_t>& family_params_F() {
  static const std::vector<std::uint64_t> v = {5, 13, 37};
  return v;
}
const std::vector<std::pair<std::uint64_t, std::uint64_t>>& family_params_G() {
  static const std::vector<std::pair<std::uint64_t, std::uint64_t>> v = {
      {3, 5},  {3, 17}, {3, 41}, {3, 89},  {5, 7},   {5, 23},
      {5, 47}, {7, 13}, {7, 61}, {11, 17}, {13, 31}};
  return v;
}
const std::vector<std::uint64_t>& family_params_g() {
  static const std::vector<std::uint64_t> v = {37, 53, 77, 101, 173, 197, 293, 437, 677};
  return v;
}

FamilyRun family_multiplet(const FamilyTag& tag) {
  FamilyRun run;
  run.tag = tag;
  auto val_at = [&](std::int64_t x) -> std::int64_t {
    switch (tag.kind) {
      case FamilyKind::E: return x * x + x + static_cast<std::int64_t>(tag.p);
      case FamilyKind::f: return 2 * x * x + static_cast<std::int64_t>(tag.p);
      case FamilyKind::F:
        return 2 * x * x + 2 * x + static_cast<std::int64_t>((tag.p + 1) / 2);
      case FamilyKind::G: {
        auto p = static_cast<std::int64_t>(tag.p);
        return p * x * x + p * x + static_cast<std::int64_t>((tag.p + tag.q) / 4);
      }
      case FamilyKind::g:
        return -x * x + x + static_cast<std::int64_t>((tag.d - 1) / 4);
    }
    return 0;
  };
  std::int64_t x_lo = 0, x_hi = -1;
  std::ostringstream law;
  switch (tag.kind) {
    case FamilyKind::E: {
      const auto& ps = family_params_E();
      if (std::find(ps.begin(), ps.end(), tag.p) == ps.end())
        throw ValidationError("family E: p must be one of {2,3,5,11,17,41}");
      x_hi = static_cast<std::int64_t>(tag.p) - 2;
      law << "2(x+1)";
      break;
    }
    case FamilyKind::f: {
      const auto& ps = family_params_f();
      if (std::find(ps.begin(), ps.end(), tag.p) == ps.end())
        throw ValidationError("family f: p must be one of {3,5,11,29}");
      x_hi = static_cast<std::int64_t>(tag.p) - 1;
      law << "2(2x+1)";
      break;
    }
    case FamilyKind::F: {
      const auto& ps = family_params_F();
      if (std::find(ps.begin(), ps.end(), tag.p) == ps.end())
        throw ValidationError("family F: p must be one of {5,13,37}");
      x_hi = (static_cast<std::int64_t>(tag.p) - 3) / 2;
      law << "4(x+1)";
      break;
    }
    case FamilyKind::G: {
      const auto& ps = family_params_G();
      if (std::find(ps.begin(), ps.end(), std::make_pair(tag.p, tag.q)) == ps.end())
        throw ValidationError("family G: (p,q) not in the declared pair list");
      x_hi = static_cast<std::int64_t>((tag.p + tag.q) / 4) - 2;
      law << "2p(x+1) with p=" << tag.p;
      break;
    }
    case FamilyKind::g: {
      const auto& ds = family_params_g();
      if (std::find(ds.begin(), ds.end(), tag.d) == ds.end())
        throw ValidationError("family g: d not in the declared list");
      x_lo = 2;
      // domain: x < sqrt(d-1)/2, strict
      double bound = std::sqrt(static_cast<double>(tag.d - 1)) / 2.0;
      x_hi = static_cast<std::int64_t>(std::ceil(bound)) - 1;
      while (static_cast<double>(x_hi) >= bound) --x_hi;
      law << "-2x";
      break;
    }
  }
  run.distance_law = law.str();

  std::int64_t prev = 0;
  for (std::int64_t x = x_lo; x <= x_hi; ++x) {
    std::int64_t v = val_at(x);
    if (v < 2 || !is_prime_u64(static_cast<std::uint64_t>(v))) {
      std::ostringstream os;
      os << "family " << to_string(tag.kind) << ": value " << v << " at x=" << x
         << " is not prime";
      throw InvariantBreach(os.str());
    }
    if (!run.xs.empty()) {
      std::int64_t expect = 0;
      switch (tag.kind) {
        case FamilyKind::E: expect = 2 * x; break;             // 2(x'+1), x'=x-1
        case FamilyKind::f: expect = 2 * (2 * (x - 1) + 1); break;
        case FamilyKind::F: expect = 4 * x; break;
        case FamilyKind::G: expect = 2 * static_cast<std::int64_t>(tag.p) * x; break;
        case FamilyKind::g: expect = -2 * (x - 1); break;
      }
      if (v - prev != expect)
        throw InvariantBreach("family distance law violated at x=" + std::to_string(x));
    }
    run.xs.push_back(x);
    run.values.push_back(static_cast<std::uint64_t>(v));
    prev = v;
  }
  return run;
}

}  // namespace primeplet
