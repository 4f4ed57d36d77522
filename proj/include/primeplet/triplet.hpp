#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primeplet/sieve.hpp"
#include "primeplet/twin.hpp"

namespace primeplet {

// Three odd primes p_i < p_m < p_f with half-gaps d1, d2. The class pair is
// the pair of twin classes of the two inner pairs; composing them pins the
// outer pair's class (see admissible_outer_classes).
struct Triplet {
  Big p_i, p_m, p_f;
  Big d1, d2;
  ClassLabel c1 = ClassLabel::I, c2 = ClassLabel::I;
  ClassLabel outer = ClassLabel::I;
  bool singlet = false;
  Big a, b;  // witnesses of the two inner pairs (0 for Special components)
};

/// Throws ValidationError on non-prime members or members <= 2.
Triplet classify_triplet(const Big& p_i, const Big& p_m, const Big& p_f);
Triplet classify_triplet_unchecked(const Big& p_i, const Big& p_m, const Big& p_f);

/// The set of outer-pair classes a given inner class pair admits. Only
/// defined for pairs without Special components.
const std::vector<ClassLabel>& admissible_outer_classes(ClassLabel c1, ClassLabel c2);

/// Returns the classified outer-pair label after asserting it lies in the
/// admissible set for the triplet's class pair (InvariantBreach otherwise —
/// the composition laws are proved, so a violation is an implementation bug).
ClassLabel outer_pair_class(const Triplet& t);

/// The witness-offset relation tying the two inner running parameters.
/// Holds for every triplet whose inner pairs are both non-Special.
bool witness_relation_holds(const Triplet& t);

std::vector<Triplet> enumerate_triplets(std::uint64_t d1, std::uint64_t d2,
                                        std::uint64_t limit);
std::vector<Triplet> enumerate_triplets(std::uint64_t d1, std::uint64_t d2,
                                        std::uint64_t limit, const PrimeSet& primes);

// A gap pair [2·d1, 2·d2] admits at most one triplet -- necessarily starting
// at 3 -- exactly when d1 ≡ d2 (mod 3) and 3 ∤ d1 (this covers both the
// equal-gap rule with 3 ∤ D and the 3 | d2-d1 rule).
struct SingletProbe {
  bool applicable = false;
  std::optional<Triplet> triplet;  // (3, 3+2d1, 3+2d1+2d2) when all prime
};

SingletProbe singlet_check(std::uint64_t d1, std::uint64_t d2);

}  // namespace primeplet
