#include "primeplet/twin.hpp"

#include <sstream>

#include "primeplet/errors.hpp"
#include "primeplet/primality.hpp"

namespace primeplet {

namespace {

template <class Int, class Pair>
Pair classify_core(const Int& p_i, const Int& p_f) {
  Pair out;
  out.p_i = p_i;
  out.p_f = p_f;
  Int D = (p_f - p_i) / 2;
  out.D = D;
  Int median = p_i + D;
  if (D % 2 == 1) {
    out.label = ClassLabel::I;
    out.median = median;            // = 2a
    out.a = median / 2;
  } else if (D % 3 != 0) {
    if (p_i == 3) {
      out.label = ClassLabel::Special;
      out.median = median;          // = p_i + D, outside the parametrization
      out.a = 0;
    } else {
      out.label = ClassLabel::II;
      out.median = median;          // = 3(2a-1)
      out.a = (median / 3 + 1) / 2;
    }
  } else {
    out.label = ClassLabel::III;
    out.median = median;            // = 2a+1 (odd: p_i odd, D even)
    out.a = (median - 1) / 2;
  }
  return out;
}

void validate_members(const Big& p_i, const Big& p_f) {
  if (p_i == 2 || p_f == 2)
    throw ValidationError("classify_twin: pairs containing 2 are trivial");
  if (p_i >= p_f) throw ValidationError("classify_twin: requires p_i < p_f");
  if ((p_f - p_i) % 2 != 0)
    throw ValidationError("classify_twin: distance must be even");
  if (!is_prime(p_i).is_prime())
    throw ValidationError("classify_twin: p_i = " + dec(p_i) + " is not prime");
  if (!is_prime(p_f).is_prime())
    throw ValidationError("classify_twin: p_f = " + dec(p_f) + " is not prime");
}

}  // namespace

const char* to_string(ClassLabel c) {
  switch (c) {
    case ClassLabel::I: return "I";
    case ClassLabel::II: return "II";
    case ClassLabel::III: return "III";
    case ClassLabel::Special: return "Special";
  }
  return "?";
}

TwinPair classify_twin(const Big& p_i, const Big& p_f) {
  validate_members(p_i, p_f);
  return classify_core<Big, TwinPair>(p_i, p_f);
}

TwinPair classify_twin_unchecked(const Big& p_i, const Big& p_f) {
  return classify_core<Big, TwinPair>(p_i, p_f);
}

TwinPair64 classify_twin_u64(std::uint64_t p_i, std::uint64_t p_f) {
  return classify_core<std::uint64_t, TwinPair64>(p_i, p_f);
}

std::vector<TwinPair> enumerate_twins(std::uint64_t D, std::uint64_t limit) {
  PrimeSet primes(limit);
  return enumerate_twins(D, limit, primes);
}

std::vector<TwinPair> enumerate_twins(std::uint64_t D, std::uint64_t limit,
                                      const PrimeSet& primes) {
  if (D < 1) throw ValidationError("enumerate_twins: D must be >= 1");
  if (limit < 7) throw ValidationError("enumerate_twins: limit must be >= 7");
  if (limit > primes.limit())
    throw ValidationError("enumerate_twins: limit exceeds prime set");
  std::vector<TwinPair> out;
  if (D > limit / 2) return out;  // no pair fits below the limit
  // Walk the table rather than the running parameter so Special pairs are
  // never missed.
  for (std::uint64_t p = 3; p + 2 * D <= limit; p += 2) {
    if (!primes.contains(p) || !primes.contains(p + 2 * D)) continue;
    out.push_back(classify_twin_unchecked(Big(static_cast<unsigned long>(p)),
                                          Big(static_cast<unsigned long>(p + 2 * D))));
  }
  return out;
}

ResidueSignature residue_signature(const TwinPair& pair) {
  if (pair.label == ClassLabel::Special)
    throw NotApplicableError("residue_signature: Special pair");
  if (pair.p_i == 3)
    throw NotApplicableError("residue_signature: member 3 has residue 3 mod 6");

  auto norm = [](long v) {
    int r = static_cast<int>(((v % 6) + 6) % 6);
    return r == 5 ? -1 : r;
  };
  ResidueSignature sig;
  long d_mod6 = static_cast<long>(mpz_fdiv_ui(pair.D.get_mpz_t(), 6));
  long a_mod3 = static_cast<long>(mpz_fdiv_ui(pair.a.get_mpz_t(), 3));
  int a0 = a_mod3 == 2 ? -1 : static_cast<int>(a_mod3);

  switch (pair.label) {
    case ClassLabel::I: {
      // D ≡ 1+2r (mod 6): r = 0, +1, -1 for D ≡ 1, 3, 5
      sig.has_r = sig.has_a0 = true;
      sig.r = d_mod6 == 1 ? 0 : d_mod6 == 3 ? 1 : -1;
      sig.a0 = a0;
      sig.pi_mod6 = norm(-1 - 2 * sig.r + 2 * sig.a0);
      sig.pf_mod6 = norm(1 + 2 * sig.r + 2 * sig.a0);
      break;
    }
    case ClassLabel::II: {
      // D ≡ 2r (mod 6), canonical r = ±1; members sit at 3 ∓ 2r.
      sig.has_r = true;
      sig.r = d_mod6 == 2 ? 1 : -1;
      sig.pi_mod6 = norm(3 - 2 * sig.r);
      sig.pf_mod6 = norm(3 + 2 * sig.r);
      break;
    }
    case ClassLabel::III: {
      // Both members ≡ 2a+1 (mod 6); a ≡ 1 (mod 3) cannot occur.
      sig.has_a0 = true;
      sig.a0 = a0;
      sig.pi_mod6 = sig.pf_mod6 = norm(2 * sig.a0 + 1);
      break;
    }
    default: break;
  }
  return sig;
}

SixmForm sixm_form(const TwinPair& pair) {
  if (pair.p_i == 3 || pair.p_f == 3)
    throw NotApplicableError("sixm_form: 3 is not of the form 6m±1");
  SixmForm f;
  long ri = static_cast<long>(mpz_fdiv_ui(pair.p_i.get_mpz_t(), 6));
  long rf = static_cast<long>(mpz_fdiv_ui(pair.p_f.get_mpz_t(), 6));
  f.c_i = ri == 1 ? 1 : -1;
  f.c_f = rf == 1 ? 1 : -1;
  f.m = (pair.p_i - f.c_i) / 6;
  f.k = (pair.p_f - f.c_f) / 6 - f.m;
  return f;
}

std::string SixmForm::text() const {
  std::ostringstream os;
  os << "6m" << (c_i > 0 ? "+1" : "-1") << ", ";
  if (sgn(k) == 0)
    os << "6m";
  else
    os << "6(m+" << dec(k) << ")";
  os << (c_f > 0 ? "+1" : "-1") << " for m=" << dec(m);
  return os.str();
}

}  // namespace primeplet
