#include "primeplet/triplet.hpp"

#include <string>

#include "primeplet/errors.hpp"
#include "primeplet/primality.hpp"

namespace primeplet {

namespace {

bool singlet_rule_applies(const Big& d1, const Big& d2) {
  return d1 % 3 != 0 && (d2 - d1) % 3 == 0;
}

int idx(ClassLabel c) { return static_cast<int>(c); }

}  // namespace

Triplet classify_triplet_unchecked(const Big& p_i, const Big& p_m, const Big& p_f) {
  Triplet t;
  t.p_i = p_i;
  t.p_m = p_m;
  t.p_f = p_f;
  t.d1 = (p_m - p_i) / 2;
  t.d2 = (p_f - p_m) / 2;
  TwinPair in1 = classify_twin_unchecked(p_i, p_m);
  TwinPair in2 = classify_twin_unchecked(p_m, p_f);
  t.c1 = in1.label;
  t.c2 = in2.label;
  t.a = in1.a;
  t.b = in2.a;
  t.outer = classify_twin_unchecked(p_i, p_f).label;
  t.singlet = (p_i == 3) && singlet_rule_applies(t.d1, t.d2);
  return t;
}

Triplet classify_triplet(const Big& p_i, const Big& p_m, const Big& p_f) {
  if (!(p_i < p_m && p_m < p_f))
    throw ValidationError("classify_triplet: requires p_i < p_m < p_f");
  for (const Big* p : {&p_i, &p_m, &p_f}) {
    if (*p <= 2) throw ValidationError("classify_triplet: members must be odd primes");
    if (!is_prime(*p).is_prime())
      throw ValidationError("classify_triplet: " + dec(*p) + " is not prime");
  }
  return classify_triplet_unchecked(p_i, p_m, p_f);
}

const std::vector<ClassLabel>& admissible_outer_classes(ClassLabel c1, ClassLabel c2) {
  using C = ClassLabel;
  static const std::vector<ClassLabel> table[3][3] = {
      /* (I,·)   */ {{C::II, C::Special, C::III}, {C::I}, {C::I}},
      /* (II,·)  */ {{C::I}, {C::III}, {C::II}},
      /* (III,·) */ {{C::I}, {C::II}, {C::III}},
  };
  if (c1 == C::Special || c2 == C::Special)
    throw NotApplicableError("no composition law for Special components");
  return table[idx(c1)][idx(c2)];
}

ClassLabel outer_pair_class(const Triplet& t) {
  if (t.c1 == ClassLabel::Special || t.c2 == ClassLabel::Special) return t.outer;
  const auto& adm = admissible_outer_classes(t.c1, t.c2);
  for (ClassLabel c : adm) {
    if (c == t.outer) return t.outer;
  }
  throw InvariantBreach("outer class " + std::string(to_string(t.outer)) +
                        " not admissible for (" + to_string(t.c1) + "," +
                        to_string(t.c2) + ") at p_i=" + dec(t.p_i));
}

bool witness_relation_holds(const Triplet& t) {
  using C = ClassLabel;
  if (t.c1 == C::Special || t.c2 == C::Special) return true;
  const Big s = t.d1 + t.d2;
  const Big &a = t.a, &b = t.b;
  if (t.c1 == C::I && t.c2 == C::I) return 2 * (b - a) == s;
  if (t.c1 == C::I && t.c2 == C::II) return 2 * a == 6 * b - s - 3;
  if (t.c1 == C::II && t.c2 == C::I) return 2 * b == 6 * a + s - 3;
  if (t.c1 == C::II && t.c2 == C::II) return 6 * (b - a) == s;
  if (t.c1 == C::I && t.c2 == C::III) return 2 * b == 2 * a + s - 1;
  if (t.c1 == C::III && t.c2 == C::I) return 2 * b == 2 * a + s + 1;
  if (t.c1 == C::II && t.c2 == C::III) return 2 * b == 6 * a - 4 + s;
  if (t.c1 == C::III && t.c2 == C::II) return 6 * b == 2 * a + 4 + s;
  /* (III,III) */ return 2 * (b - a) == s;
}

std::vector<Triplet> enumerate_triplets(std::uint64_t d1, std::uint64_t d2,
                                        std::uint64_t limit) {
  PrimeSet primes(limit);
  return enumerate_triplets(d1, d2, limit, primes);
}

std::vector<Triplet> enumerate_triplets(std::uint64_t d1, std::uint64_t d2,
                                        std::uint64_t limit, const PrimeSet& primes) {
  if (d1 < 1 || d2 < 1)
    throw ValidationError("enumerate_triplets: gaps must be >= 1");
  if (limit > primes.limit())
    throw ValidationError("enumerate_triplets: limit exceeds prime set");
  std::vector<Triplet> out;
  if (d1 > limit / 2 || d2 > limit / 2 || d1 + d2 > limit / 2) return out;
  for (std::uint64_t p = 3; p + 2 * d1 + 2 * d2 <= limit; p += 2) {
    if (!primes.contains(p) || !primes.contains(p + 2 * d1) ||
        !primes.contains(p + 2 * d1 + 2 * d2))
      continue;
    out.push_back(classify_triplet_unchecked(
        Big(static_cast<unsigned long>(p)),
        Big(static_cast<unsigned long>(p + 2 * d1)),
        Big(static_cast<unsigned long>(p + 2 * d1 + 2 * d2))));
  }
  return out;
}

SingletProbe singlet_check(std::uint64_t d1, std::uint64_t d2) {
  SingletProbe probe;
  probe.applicable = singlet_rule_applies(Big(static_cast<unsigned long>(d1)),
                                          Big(static_cast<unsigned long>(d2)));
  if (!probe.applicable) return probe;
  Big p_m = 3 + 2 * Big(static_cast<unsigned long>(d1));
  Big p_f = p_m + 2 * Big(static_cast<unsigned long>(d2));
  if (is_prime(p_m).is_prime() && is_prime(p_f).is_prime()) {
    probe.triplet = classify_triplet_unchecked(3, p_m, p_f);
  }
  return probe;
}

}  // namespace primeplet
