#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "primeplet/primality.hpp"
#include "primeplet/twin.hpp"

namespace primeplet {

enum class FormKind { Mersenne, Fermat };

const char* to_string(FormKind k);

// Scan hit anchored at 2^p - 1 (Mersenne, prime exponent p) or 2^(2^n) + 1
// (Fermat). Companions are anchor + k for the given even offsets; members is
// the full value list in ascending order.
struct SpecialFormRecord {
  FormKind kind = FormKind::Mersenne;
  std::uint64_t exponent = 0;  // p, or n
  Big anchor;
  std::vector<std::int64_t> offsets;
  std::vector<Big> members;
  std::vector<Primality> verdicts;       // per member, aligned with members
  std::vector<ClassLabel> labels;        // inner-pair classes (1=pair, 2=triplet)
  bool probable = false;                 // some member is only a probable prime
};

/// Exponents whose anchor and all companions are prime, p over primes
/// <= p_max. Anchors are tested deterministically at any size; companions
/// above 2^64 may be probable (flagged). Companions <= 1 disqualify the
/// exponent silently. Each exponent's work is independent; `threads`
/// splits the exponent list and the merge keeps ascending order.
std::vector<SpecialFormRecord> mersenne_scan(const std::vector<std::int64_t>& offsets,
                                             std::uint64_t p_max,
                                             unsigned threads = 1);

/// Same over Fermat indices 0..n_max. n_max > 10 is refused (the operand
/// doubles per index).
std::vector<SpecialFormRecord> fermat_scan(const std::vector<std::int64_t>& offsets,
                                           std::uint64_t n_max,
                                           unsigned threads = 1);

// Residue predicate on the exponent, e.g. "p ≡ 1 (mod 3), p >= 7".
struct ExponentCondition {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> residues;  // allowed; empty with modulus 1 = all
  std::uint64_t min_exponent = 2;

  bool satisfied(std::uint64_t e) const;
  std::string text() const;
};

// One divisibility law: whenever the condition holds, divisor | anchor+offset.
// The laws are data; one generic verifier executes them all.
struct DivisibilityGuard {
  std::string id;
  FormKind kind = FormKind::Mersenne;
  std::uint64_t divisor = 0;
  std::int64_t target_offset = 0;
  ExponentCondition condition;
  std::string law;  // display text, e.g. "7 | 2^p+5"
};

const std::vector<DivisibilityGuard>& guard_table();
const DivisibilityGuard& find_guard(const std::string& id);

struct GuardReport {
  std::string id;
  std::string law;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;  // condition unmet or companion <= 1
  std::vector<std::uint64_t> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

GuardReport verify_guard(const DivisibilityGuard& g,
                         std::span<const std::uint64_t> exponents);
/// Runs every table row: Mersenne rows over primes <= p_max, Fermat rows
/// over 0..n_max.
std::vector<GuardReport> verify_all_guards(std::uint64_t p_max, std::uint64_t n_max);

// Exclusion sets of the two published forms of the "7 | 2^(2^n)+3" condition;
// they coincide (odd n), which the tests pin down.
std::vector<std::uint64_t> excluded_by_2n_mod3(std::uint64_t n_max);
std::vector<std::uint64_t> excluded_by_2nm1_mod3(std::uint64_t n_max);

// A uniqueness claim: scanning the family up to the bound finds exactly
// `expected` exponents.
struct UniquenessClaim {
  std::string id;
  FormKind kind = FormKind::Mersenne;
  std::vector<std::int64_t> offsets;
  ExponentCondition condition;  // domain restriction on exponents
  std::vector<std::uint64_t> expected;
  std::uint64_t default_bound = 127;
};

const std::vector<UniquenessClaim>& uniqueness_claims();

struct AuditReport {
  std::string id;
  std::uint64_t bound = 0;
  std::vector<std::uint64_t> witnesses;
  std::vector<std::uint64_t> expected;
  bool probable_used = false;  // some witness involved a probable prime

  bool ok() const { return witnesses == expected; }
  std::vector<std::uint64_t> extra_witnesses() const;
};

/// Throws ValidationError for unknown claim ids.
AuditReport uniqueness_audit(const std::string& claim_id, std::uint64_t bound);

}  // namespace primeplet
