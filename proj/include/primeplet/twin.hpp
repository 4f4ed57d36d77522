#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primeplet/bigint.hpp"
#include "primeplet/sieve.hpp"

namespace primeplet {

// Every pair of odd primes (p_i, p_f) at even distance 2D lands in exactly
// one class, keyed by the arithmetic of D:
//   I:   D odd         median 2a,       p = 2a -/+ D
//   II:  D even, 3∤D   median 3(2a-1),  p = 3(2a-1) -/+ D   (p_i != 3)
//   III: 6 | D         median 2a+1,     p = 2a+1 -/+ D
// Pairs (3, 3+2D) with D even and 3∤D fall outside the parametrization and
// are labeled Special.
enum class ClassLabel { I, II, III, Special };

const char* to_string(ClassLabel c);

struct TwinPair {
  Big p_i, p_f;      // members, p_i < p_f
  Big D;             // half-distance
  ClassLabel label = ClassLabel::I;
  Big a;             // running-parameter witness (0 for Special)
  Big median;        // 2a | 3(2a-1) | 2a+1 | p_i + D
};

// Same record over machine words; the fast path for table-range audits.
struct TwinPair64 {
  std::uint64_t p_i = 0, p_f = 0, D = 0;
  ClassLabel label = ClassLabel::I;
  std::uint64_t a = 0, median = 0;
};

/// Classify a validated pair. Throws ValidationError when a member fails
/// primality, p_i >= p_f, the distance is odd, or p_i == 2 (pairs containing
/// 2 are rejected as trivial).
TwinPair classify_twin(const Big& p_i, const Big& p_f);

/// Classification without re-proving primality; members must be known prime.
TwinPair classify_twin_unchecked(const Big& p_i, const Big& p_f);
TwinPair64 classify_twin_u64(std::uint64_t p_i, std::uint64_t p_f);

/// All pairs (p, p+2D) with both members prime and <= limit, ascending by p.
/// Special pairs are included when they exist.
std::vector<TwinPair> enumerate_twins(std::uint64_t D, std::uint64_t limit);
std::vector<TwinPair> enumerate_twins(std::uint64_t D, std::uint64_t limit,
                                      const PrimeSet& primes);

// Mod-6 behaviour of a classified pair. For class I, D ≡ 1+2r (mod 6) with
// r in {0,±1} and a ≡ a0 (mod 3); for class II, D ≡ 2r (mod 6) with r = ±1;
// for class III only a0 matters. Predicted residues are ±1 and always match
// the members' actual residues.
struct ResidueSignature {
  bool has_r = false, has_a0 = false;
  int r = 0;
  int a0 = 0;
  int pi_mod6 = 0, pf_mod6 = 0;  // in {-1, +1}
};

/// Throws NotApplicableError for Special pairs and pairs containing 3
/// (their residues are not ±1 mod 6).
ResidueSignature residue_signature(const TwinPair& pair);

// Representation p = 6m + c with c = ±1: p_i = 6m + c_i,
// p_f = 6(m + k) + c_f.
struct SixmForm {
  Big m;
  int c_i = 0;
  Big k;
  int c_f = 0;

  std::string text() const;  // e.g. "6m-1, 6(m+2)-1 for m=1"
  Big eval_i() const { return 6 * m + c_i; }
  Big eval_f() const { return 6 * (m + k) + c_f; }
};

/// Throws NotApplicableError when a member equals 3.
SixmForm sixm_form(const TwinPair& pair);

}  // namespace primeplet
