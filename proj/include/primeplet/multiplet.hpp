#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace primeplet {

// A maximal run start, start+2, start+6, ..., start+n(n+1) of primes; the
// consecutive differences are exactly 2, 4, 6, ..., i.e. the value sequence
// of the monic quadratic x^2 + x + start.
struct RegularMultiplet {
  std::uint64_t start = 0;
  std::uint64_t length = 0;
  std::vector<std::uint64_t> members;
  bool maximal = true;  // start + length(length+1) is composite
  // "E" when the run is the full value run of x^2 + x + start for one of
  // the listed parameters (the only family with this distance law); empty
  // otherwise.
  std::string family;
};

/// Maximal run from a prime start. ValidationError if start is not prime.
RegularMultiplet extend_regular(std::uint64_t start);

/// All maximal runs of length >= min_length with start <= limit, ascending.
/// `threads` splits the start range; the merge preserves order.
std::vector<RegularMultiplet> find_regular(std::uint64_t min_length,
                                           std::uint64_t limit,
                                           unsigned threads = 1);

// Same pattern with up to max_missing composite positions. start is the
// pattern origin: it may itself be composite exactly when position 0 is
// among the missing ones. span counts positions (prime or missing); the
// last position is always prime.
struct AlmostRegularMultiplet {
  std::uint64_t start = 0;
  std::uint64_t span = 0;
  std::vector<std::uint64_t> members;
  std::vector<std::uint64_t> missing_indices;
};

/// max_missing <= 2. With max_missing = 0 this reduces exactly to
/// find_regular output.
std::vector<AlmostRegularMultiplet> find_almost_regular(std::uint64_t min_length,
                                                        std::uint64_t limit,
                                                        std::uint64_t max_missing);

// Quadratic families whose value runs are regular multiplets:
//   E: x^2+x+p          x = 0..p-2        distances 2(x+1)
//   f: 2x^2+p           x = 0..p-1        distances 2(2x+1)
//   F: 2x^2+2x+(p+1)/2  x = 0..(p-3)/2    distances 4(x+1)
//   G: px^2+px+(p+q)/4  x = 0..(p+q)/4-2  distances 2p(x+1)
//   g: -x^2+x+(d-1)/4   x = 2.. < sqrt(d-1)/2   distances -2x
enum class FamilyKind { E, f, F, G, g };

const char* to_string(FamilyKind k);

struct FamilyTag {
  FamilyKind kind = FamilyKind::E;
  std::uint64_t p = 0;  // E, f, F, G
  std::uint64_t q = 0;  // G only
  std::uint64_t d = 0;  // g only
};

struct FamilyRun {
  FamilyTag tag;
  std::vector<std::int64_t> xs;
  std::vector<std::uint64_t> values;
  std::string distance_law;
};

/// Known-good parameters per family (ValidationError otherwise):
/// E: p in {2,3,5,11,17,41}; f: {3,5,11,29}; F: {5,13,37};
/// G: the eleven (p,q) pairs; g: d in {37,53,77,101,173,197,293,437,677}.
FamilyRun family_multiplet(const FamilyTag& tag);

/// The family's declared parameter sets, exposed for enumeration.
const std::vector<std::uint64_t>& family_params_E();
const std::vector<std::uint64_t>& family_params_f();
const std::vector<std::uint64_t>& family_params_F();
const std::vector<std::pair<std::uint64_t, std::uint64_t>>& family_params_G();
const std::vector<std::uint64_t>& family_params_g();

}  // namespace primeplet
