#include "primeplet/special_forms.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "primeplet/errors.hpp"
#include "primeplet/triplet.hpp"

namespace primeplet {

namespace {

constexpr std::uint64_t kMaxFermatIndex = 10;

Big anchor_of(FormKind kind, std::uint64_t e) {
  return kind == FormKind::Mersenne ? mersenne_number(e) : fermat_number(e);
}

PrimalityVerdict anchor_verdict(FormKind kind, std::uint64_t e) {
  return kind == FormKind::Mersenne ? lucas_lehmer(e)
                                    : pepin(static_cast<unsigned long>(e));
}

void validate_offsets(const std::vector<std::int64_t>& offsets) {
  if (offsets.empty()) throw ValidationError("scan: at least one offset required");
  std::int64_t prev = 0;
  bool first = true;
  for (std::int64_t k : offsets) {
    if (k == 0 || k % 2 != 0)
      throw ValidationError("scan: offsets must be nonzero and even");
    if (!first && k <= prev)
      throw ValidationError("scan: offsets must be strictly ascending");
    prev = k;
    first = false;
  }
}

std::vector<std::uint64_t> exponent_range(FormKind kind, std::uint64_t bound) {
  std::vector<std::uint64_t> es;
  if (kind == FormKind::Mersenne) {
    for (std::uint64_t p = 2; p <= bound; ++p)
      if (is_prime_u64(p)) es.push_back(p);
  } else {
    for (std::uint64_t n = 0; n <= bound; ++n) es.push_back(n);
  }
  return es;
}

// One exponent's worth of scan work; nullopt when it does not qualify.
std::optional<SpecialFormRecord> scan_one(FormKind kind, std::uint64_t e,
                                          const std::vector<std::int64_t>& offsets) {
  PrimalityVerdict av = anchor_verdict(kind, e);
  if (!av.is_prime()) return std::nullopt;

  SpecialFormRecord rec;
  rec.kind = kind;
  rec.exponent = e;
  rec.anchor = anchor_of(kind, e);
  rec.offsets = offsets;

  // members = {anchor} ∪ {anchor + k}, ascending (offsets are sorted and 0
  // is excluded, so a single merge position suffices).
  std::vector<std::pair<Big, Primality>> mem;
  mem.emplace_back(rec.anchor, av.status);
  for (std::int64_t k : offsets) {
    Big v = rec.anchor + k;
    if (v <= 1) return std::nullopt;  // negative companion: skip this exponent
    PrimalityVerdict pv = is_prime(v);
    if (!pv.is_prime()) return std::nullopt;
    mem.emplace_back(v, pv.status);
  }
  std::sort(mem.begin(), mem.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [v, s] : mem) {
    rec.members.push_back(v);
    rec.verdicts.push_back(s);
    if (s == Primality::ProbablePrime) rec.probable = true;
  }
  for (std::size_t i = 0; i + 1 < rec.members.size(); ++i) {
    rec.labels.push_back(
        classify_twin_unchecked(rec.members[i], rec.members[i + 1]).label);
  }
  return rec;
}

}  // namespace

static std::vector<SpecialFormRecord> scan_exponents(FormKind kind,
                                              const std::vector<std::uint64_t>& es,
                                              const std::vector<std::int64_t>& offsets,
                                              unsigned threads) {
  std::vector<SpecialFormRecord> out;
  if (threads <= 1 || es.size() < 2) {
    for (std::uint64_t e : es) {
      if (auto rec = scan_one(kind, e, offsets)) out.push_back(std::move(*rec));
    }
    return out;
  }
  std::size_t chunk = (es.size() + threads - 1) / threads;
  std::vector<std::future<std::vector<SpecialFormRecord>>> parts;
  for (std::size_t lo = 0; lo < es.size(); lo += chunk) {
    std::size_t hi = std::min(es.size(), lo + chunk);
    parts.push_back(std::async(std::launch::async, [&, lo, hi] {
      std::vector<SpecialFormRecord> part;
      for (std::size_t i = lo; i < hi; ++i) {
        if (auto rec = scan_one(kind, es[i], offsets)) part.push_back(std::move(*rec));
      }
      return part;
    }));
  }
  for (auto& f : parts) {
    auto part = f.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;  // chunks are contiguous, so exponent order is preserved
}

const char* to_string(FormKind k) {
  return k == FormKind::Mersenne ? "mersenne" : "fermat";
}

std::vector<SpecialFormRecord> mersenne_scan(const std::vector<std::int64_t>& offsets,
                                             std::uint64_t p_max, unsigned threads) {
  validate_offsets(offsets);
  return scan_exponents(FormKind::Mersenne, exponent_range(FormKind::Mersenne, p_max),
                        offsets, threads);
}

std::vector<SpecialFormRecord> fermat_scan(const std::vector<std::int64_t>& offsets,
                                           std::uint64_t n_max, unsigned threads) {
  validate_offsets(offsets);
  if (n_max > kMaxFermatIndex)
    throw CapacityError("fermat_scan: n_max > 10 (operand doubles per index)");
  return scan_exponents(FormKind::Fermat, exponent_range(FormKind::Fermat, n_max),
                        offsets, threads);
}

bool ExponentCondition::satisfied(std::uint64_t e) const {
  if (e < min_exponent) return false;
  if (modulus <= 1 || residues.empty()) return true;
  std::uint64_t r = e % modulus;
  return std::find(residues.begin(), residues.end(), r) != residues.end();
}

std::string ExponentCondition::text() const {
  std::ostringstream os;
  bool any = false;
  if (modulus > 1 && !residues.empty()) {
    os << "e ≡ ";
    for (std::size_t i = 0; i < residues.size(); ++i)
      os << (i ? "," : "") << residues[i];
    os << " (mod " << modulus << ")";
    any = true;
  }
  if (min_exponent > 2) {
    os << (any ? ", " : "") << "e >= " << min_exponent;
    any = true;
  }
  if (!any) os << "all";
  return os.str();
}

const std::vector<DivisibilityGuard>& guard_table() {
  using FK = FormKind;
  static const std::vector<DivisibilityGuard> table = {
      // Mersenne side: companions of 2^p - 1
      {"C31", FK::Mersenne, 3, +2, {2, {1}, 3}, "3 | 2^p+1"},
      {"L32", FK::Mersenne, 7, +6, {3, {1}, 7}, "7 | 2^p+5"},
      {"L33", FK::Mersenne, 5, +4, {4, {1}, 5}, "5 | 2^p+3"},
      {"P34i", FK::Mersenne, 3, -4, {2, {1}, 3}, "3 | 2^p-5"},
      {"P34i-n1", FK::Mersenne, 3, -10, {2, {1}, 5}, "3 | 2^p-11"},
      {"P34ii", FK::Mersenne, 5, -2, {4, {3}, 3}, "5 | 2^p-3"},
      {"P34iii", FK::Mersenne, 5, -6, {4, {1}, 5}, "5 | 2^p-7"},
      {"C38", FK::Mersenne, 3, +8, {2, {1}, 3}, "3 | 2^p+7"},
      {"C38iii", FK::Mersenne, 7, +4, {3, {2}, 5}, "7 | 2^p+3"},
      {"C39", FK::Mersenne, 3, -4, {2, {1}, 3}, "3 | 2^p-5"},
      {"C310a", FK::Mersenne, 5, +4, {4, {1}, 5}, "5 | 2^p+3"},
      {"C310b", FK::Mersenne, 5, -2, {4, {3}, 3}, "5 | 2^p-3"},
      // Fermat side: companions of 2^(2^n) + 1
      {"C35i", FK::Fermat, 3, +4, {1, {}, 1}, "3 | 2^(2^n)+5"},
      {"C35ii", FK::Fermat, 5, +8, {1, {}, 2}, "5 | 2^(2^n)+9"},
      {"L36i", FK::Fermat, 7, +2, {2, {1}, 3}, "7 | 2^(2^n)+3"},
      {"L36ii", FK::Fermat, 7, +4, {2, {0}, 2}, "7 | 2^(2^n)+5"},
      {"P37a", FK::Fermat, 5, -2, {1, {}, 2}, "5 | 2^(2^n)-1"},
      {"P37b", FK::Fermat, 3, -8, {1, {}, 2}, "3 | 2^(2^n)-7"},
      {"P37c", FK::Fermat, 3, -20, {1, {}, 3}, "3 | 2^(2^n)-19"},
      {"P37d", FK::Fermat, 5, -22, {1, {}, 3}, "5 | 2^(2^n)-21"},
  };
  return table;
}

const DivisibilityGuard& find_guard(const std::string& id) {
  for (const auto& g : guard_table()) {
    if (g.id == id) return g;
  }
  throw ValidationError("unknown guard id: " + id);
}

GuardReport verify_guard(const DivisibilityGuard& g,
                         std::span<const std::uint64_t> exponents) {
  GuardReport r;
  r.id = g.id;
  r.law = g.law;
  for (std::uint64_t e : exponents) {
    if (!g.condition.satisfied(e)) {
      ++r.skipped;
      continue;
    }
    Big v = anchor_of(g.kind, e) + g.target_offset;
    if (v <= 1) {
      ++r.skipped;
      continue;
    }
    ++r.checked;
    if (!mpz_divisible_ui_p(v.get_mpz_t(), g.divisor)) r.counterexamples.push_back(e);
  }
  return r;
}

std::vector<GuardReport> verify_all_guards(std::uint64_t p_max, std::uint64_t n_max) {
  auto mers = exponent_range(FormKind::Mersenne, p_max);
  auto ferm = exponent_range(FormKind::Fermat, n_max);
  std::vector<GuardReport> out;
  for (const auto& g : guard_table()) {
    const auto& es = g.kind == FormKind::Mersenne ? mers : ferm;
    out.push_back(verify_guard(g, es));
  }
  return out;
}

std::vector<std::uint64_t> excluded_by_2n_mod3(std::uint64_t n_max) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    // 2^n mod 3 is 2 for odd n, 1 for even n
    if ((n & 1) == 1) out.push_back(n);
  }
  return out;
}

std::vector<std::uint64_t> excluded_by_2nm1_mod3(std::uint64_t n_max) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    if (((n - 1) & 1) == 0) out.push_back(n);  // 2^(n-1) ≡ 1 (mod 3) iff n-1 even
  }
  return out;
}

const std::vector<UniquenessClaim>& uniqueness_claims() {
  using FK = FormKind;
  static const std::vector<UniquenessClaim> table = {
      {"Cor3.1", FK::Mersenne, {+2}, {2, {1}, 3}, {}, 127},
      {"Prop3.4i", FK::Mersenne, {-4}, {1, {}, 2}, {3}, 127},
      {"Prop3.4i-n1", FK::Mersenne, {-10}, {1, {}, 2}, {}, 127},
      {"Prop3.4i-n2", FK::Mersenne, {-34}, {1, {}, 2}, {}, 127},
      {"Prop3.4i-n3", FK::Mersenne, {-130}, {1, {}, 2}, {}, 127},
      {"Prop3.4ii", FK::Mersenne, {-2}, {4, {3}, 2}, {3}, 127},
      {"Prop3.4iii", FK::Mersenne, {-6}, {4, {1}, 2}, {}, 127},
      {"Cor3.5i", FK::Fermat, {+4}, {1, {}, 0}, {0}, 6},
      {"Cor3.5ii", FK::Fermat, {+8}, {1, {}, 0}, {0, 1}, 6},
      {"Cor3.8i", FK::Mersenne, {+4, +8}, {1, {}, 2}, {2}, 127},
      {"Cor3.8ii", FK::Mersenne, {+6, +8}, {1, {}, 2}, {}, 127},
      {"Cor3.8iii", FK::Mersenne, {+4, +6}, {1, {}, 2}, {3}, 127},
      {"Cor3.9", FK::Mersenne, {-6, -4}, {1, {}, 2}, {}, 127},
      {"Cor3.10", FK::Mersenne, {-2, +4}, {1, {}, 2}, {3}, 127},
      {"Cor3.11i", FK::Fermat, {+2, +4}, {1, {}, 0}, {0}, 6},
      {"Cor3.11ii", FK::Fermat, {+4, +8}, {1, {}, 0}, {0}, 6},
  };
  return table;
}

std::vector<std::uint64_t> AuditReport::extra_witnesses() const {
  std::vector<std::uint64_t> extra;
  for (std::uint64_t w : witnesses) {
    if (std::find(expected.begin(), expected.end(), w) == expected.end())
      extra.push_back(w);
  }
  return extra;
}

AuditReport uniqueness_audit(const std::string& claim_id, std::uint64_t bound) {
  const UniquenessClaim* claim = nullptr;
  for (const auto& c : uniqueness_claims()) {
    if (c.id == claim_id) {
      claim = &c;
      break;
    }
  }
  if (!claim) throw ValidationError("unknown uniqueness claim: " + claim_id);

  AuditReport rep;
  rep.id = claim_id;
  rep.bound = bound;
  rep.expected = claim->expected;
  for (std::uint64_t e : exponent_range(claim->kind, bound)) {
    if (!claim->condition.satisfied(e)) continue;
    if (auto rec = scan_one(claim->kind, e, claim->offsets)) {
      rep.witnesses.push_back(e);
      if (rec->probable) rep.probable_used = true;
    }
  }
  return rep;
}

}  // namespace primeplet
