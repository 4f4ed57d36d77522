#include "primeplet/claims.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "primeplet/errors.hpp"
#include "primeplet/primality.hpp"

namespace primeplet {

namespace {

std::string claims_path() {
  if (const char* p = std::getenv("PRIMEPLET_CLAIMS")) return p;
#ifdef PRIMEPLET_CLAIMS_FILE
  return PRIMEPLET_CLAIMS_FILE;
#else
  return "data/claims.json";
#endif
}

const PrimeSet& shared_prime_set(std::uint64_t limit) {
  static std::map<std::uint64_t, std::unique_ptr<PrimeSet>> cache;
  auto it = cache.find(limit);
  if (it == cache.end())
    it = cache.emplace(limit, std::make_unique<PrimeSet>(limit)).first;
  return *it->second;
}

std::vector<std::uint64_t> u64_list(const Json& a) {
  std::vector<std::uint64_t> out;
  for (const auto& v : a) out.push_back(v.get<std::uint64_t>());
  return out;
}

std::vector<std::int64_t> i64_list(const Json& a) {
  std::vector<std::int64_t> out;
  for (const auto& v : a) out.push_back(v.get<std::int64_t>());
  return out;
}

bool is_member_subset(const std::vector<std::uint64_t>& want,
                      const std::vector<std::uint64_t>& have) {
  for (auto w : want) {
    if (std::find(have.begin(), have.end(), w) == have.end()) return false;
  }
  return true;
}

// semantics: "exact" (found == expected), "prefix" (found starts with
// expected), "members" (expected ⊆ found; optional "frozen" pins the full
// found list as a regression).
bool check_list(const Json& expect, const std::vector<std::uint64_t>& found,
                Json& detail) {
  auto want = u64_list(expect.at("witnesses"));
  std::string sem = expect.value("semantics", "exact");
  Json ja = Json::array();
  for (auto v : found) ja.push_back(json_int(v));
  detail["found"] = ja;
  bool ok = false;
  if (sem == "exact") {
    ok = found == want;
  } else if (sem == "prefix") {
    ok = found.size() >= want.size() &&
         std::equal(want.begin(), want.end(), found.begin());
  } else if (sem == "members") {
    ok = is_member_subset(want, found);
    Json extras = Json::array();
    for (auto v : found) {
      if (std::find(want.begin(), want.end(), v) == want.end())
        extras.push_back(json_int(v));
    }
    detail["extra_witnesses"] = extras;
  } else {
    throw ValidationError("claim: unknown list semantics '" + sem + "'");
  }
  if (expect.contains("frozen")) {
    ok = ok && found == u64_list(expect.at("frozen"));
  }
  return ok;
}

using Handler = bool (*)(const Json& params, const Json& expect, Json& detail);

bool run_twin_witnesses(const Json& params, const Json& expect, Json& detail) {
  std::uint64_t D = params.at("D").get<std::uint64_t>();
  std::uint64_t limit = params.at("limit").get<std::uint64_t>();
  std::string want_class = params.value("class", "");
  auto pairs = enumerate_twins(D, limit, shared_prime_set(limit));
  std::vector<std::uint64_t> witnesses;
  bool special_seen = false;
  Big special_pi = 0, special_pf = 0;
  for (const auto& p : pairs) {
    if (p.label == ClassLabel::Special) {
      special_seen = true;
      special_pi = p.p_i;
      special_pf = p.p_f;
      continue;
    }
    if (!want_class.empty() && want_class != to_string(p.label)) return false;
    witnesses.push_back(to_u64(p.a));
  }
  bool ok = check_list(expect, witnesses, detail);
  if (expect.contains("special")) {
    auto sp = u64_list(expect.at("special"));
    ok = ok && special_seen && special_pi == sp.at(0) && special_pf == sp.at(1);
  } else {
    ok = ok && !special_seen;
  }
  return ok;
}

bool run_residue_conformance(const Json& params, const Json& expect, Json& detail) {
  (void)expect;
  std::uint64_t d_max = params.at("D_max").get<std::uint64_t>();
  std::uint64_t limit = params.at("limit").get<std::uint64_t>();
  const PrimeSet& primes = shared_prime_set(limit);
  std::uint64_t checked = 0, bad = 0;
  for (std::uint64_t D = 1; D <= d_max; ++D) {
    for (const auto& p : enumerate_twins(D, limit, primes)) {
      if (p.label == ClassLabel::Special || p.p_i == 3) continue;
      ++checked;
      ResidueSignature s = residue_signature(p);
      long pi6 = static_cast<long>(mpz_fdiv_ui(p.p_i.get_mpz_t(), 6));
      long pf6 = static_cast<long>(mpz_fdiv_ui(p.p_f.get_mpz_t(), 6));
      if (s.pi_mod6 != (pi6 == 1 ? 1 : -1) || s.pf_mod6 != (pf6 == 1 ? 1 : -1)) ++bad;
    }
  }
  detail["pairs_checked"] = checked;
  detail["mismatches"] = bad;
  return bad == 0 && checked > 0;
}

bool run_sixm_forms(const Json& params, const Json& expect, Json& detail) {
  std::uint64_t D = params.at("D").get<std::uint64_t>();
  std::uint64_t limit = params.at("limit").get<std::uint64_t>();
  auto pairs = enumerate_twins(D, limit, shared_prime_set(limit));
  std::vector<std::vector<std::int64_t>> allowed;
  for (const auto& f : expect.at("forms")) allowed.push_back(i64_list(f));
  std::size_t checked = 0;
  for (const auto& p : pairs) {
    if (p.p_i == 3 || p.p_f == 3) continue;
    SixmForm f = sixm_form(p);
    if (f.eval_i() != p.p_i || f.eval_f() != p.p_f) return false;
    std::vector<std::int64_t> got = {f.c_i, static_cast<std::int64_t>(to_u64(f.k)),
                                     f.c_f};
    if (std::find(allowed.begin(), allowed.end(), got) == allowed.end()) {
      detail["violating_pair"] = Json::array({json_int(p.p_i), json_int(p.p_f)});
      return false;
    }
    ++checked;
  }
  detail["pairs_checked"] = checked;
  return checked > 0;
}

bool run_triplet_list(const Json& params, const Json& expect, Json& detail) {
  std::uint64_t d1 = params.at("g1").get<std::uint64_t>() / 2;
  std::uint64_t d2 = params.at("g2").get<std::uint64_t>() / 2;
  std::uint64_t limit = params.at("limit").get<std::uint64_t>();
  auto ts = enumerate_triplets(d1, d2, limit, shared_prime_set(limit));
  std::vector<std::uint64_t> starts;
  for (const auto& t : ts) starts.push_back(to_u64(t.p_i));
  bool ok = check_list(expect, starts, detail);
  if (expect.contains("classes")) {
    std::string c1 = expect.at("classes").at(0).get<std::string>();
    std::string c2 = expect.at("classes").at(1).get<std::string>();
    for (const auto& t : ts) {
      if (t.p_i == 3) continue;  // singlets sit outside the class grid
      if (c1 != to_string(t.c1) || c2 != to_string(t.c2)) ok = false;
    }
  }
  if (expect.contains("singlet_start")) {
    bool found = false;
    for (const auto& t : ts)
      if (t.singlet && t.p_i == expect.at("singlet_start").get<std::uint64_t>())
        found = true;
    ok = ok && found;
  }
  return ok;
}

bool run_singlet(const Json& params, const Json& expect, Json& detail) {
  std::uint64_t d1 = params.at("g1").get<std::uint64_t>() / 2;
  std::uint64_t d2 = params.at("g2").get<std::uint64_t>() / 2;
  SingletProbe probe = singlet_check(d1, d2);
  detail["applicable"] = probe.applicable;
  if (expect.contains("not_applicable")) return !probe.applicable;
  if (!probe.applicable) return false;
  if (expect.contains("none")) return !probe.triplet.has_value();
  if (!probe.triplet) return false;
  auto want = u64_list(expect.at("members"));
  const Triplet& t = *probe.triplet;
  detail["members"] =
      Json::array({json_int(t.p_i), json_int(t.p_m), json_int(t.p_f)});
  return t.p_i == want.at(0) && t.p_m == want.at(1) && t.p_f == want.at(2) &&
         t.singlet;
}

// at most one triplet for the gap pair, and it must start at 3
bool run_equal_gap_audit(const Json& params, const Json& expect, Json& detail) {
  std::uint64_t d1, d2;
  if (params.contains("D")) {
    d1 = d2 = params.at("D").get<std::uint64_t>();
  } else {
    d1 = params.at("g1").get<std::uint64_t>() / 2;
    d2 = params.at("g2").get<std::uint64_t>() / 2;
  }
  std::uint64_t limit = params.at("limit").get<std::uint64_t>();
  auto ts = enumerate_triplets(d1, d2, limit, shared_prime_set(limit));
  detail["count"] = ts.size();
  if (ts.size() > 1) return false;
  for (const auto& t : ts) {
    if (t.p_i != 3) return false;
  }
  if (expect.contains("members")) {
    if (ts.empty()) return false;
    auto want = u64_list(expect.at("members"));
    return ts[0].p_i == want[0] && ts[0].p_m == want[1] && ts[0].p_f == want[2];
  }
  if (expect.contains("none")) return ts.empty();
  return true;
}

bool run_scan(const Json& params, const Json& expect, Json& detail) {
  auto offsets = i64_list(params.at("offsets"));
  std::uint64_t bound = params.at("max").get<std::uint64_t>();
  bool fermat = params.at("form").get<std::string>() == "fermat";
  auto recs = fermat ? fermat_scan(offsets, bound) : mersenne_scan(offsets, bound);
  std::vector<std::uint64_t> found;
  bool probable = false;
  for (const auto& r : recs) {
    found.push_back(r.exponent);
    probable = probable || r.probable;
  }
  detail["probable_used"] = probable;
  bool ok = check_list(expect, found, detail);
  if (expect.contains("members_at")) {
    // pin the printed member values of one witness
    std::uint64_t e = expect.at("members_at").at("exponent").get<std::uint64_t>();
    auto want = u64_list(expect.at("members_at").at("members"));
    bool hit = false;
    for (const auto& r : recs) {
      if (r.exponent != e) continue;
      hit = r.members.size() == want.size();
      for (std::size_t i = 0; hit && i < want.size(); ++i)
        hit = r.members[i] == want[i];
    }
    ok = ok && hit;
  }
  if (expect.contains("classes")) {
    for (const auto& r : recs) {
      const auto& want = expect.at("classes");
      if (r.labels.size() != want.size()) return false;
      for (std::size_t i = 0; i < want.size(); ++i) {
        if (want.at(i).get<std::string>() != to_string(r.labels[i])) {
          detail["class_mismatch_at"] = r.exponent;
          return false;
        }
      }
    }
  }
  return ok;
}

bool run_uniqueness(const Json& params, const Json& expect, Json& detail) {
  (void)expect;
  AuditReport rep = uniqueness_audit(params.at("claim").get<std::string>(),
                                     params.at("bound").get<std::uint64_t>());
  detail = to_json(rep);
  return rep.ok();
}

bool run_guard(const Json& params, const Json& expect, Json& detail) {
  (void)expect;
  const DivisibilityGuard& g = find_guard(params.at("guard").get<std::string>());
  std::uint64_t bound = params.at("bound").get<std::uint64_t>();
  std::vector<std::uint64_t> es;
  if (g.kind == FormKind::Mersenne) {
    for (std::uint64_t p = 2; p <= bound; ++p)
      if (is_prime_u64(p)) es.push_back(p);
  } else {
    for (std::uint64_t n = 0; n <= bound; ++n) es.push_back(n);
  }
  GuardReport rep = verify_guard(g, es);
  detail = to_json(rep);
  return rep.ok() && rep.checked > 0;
}

bool run_census(const Json& params, const Json& expect, Json& detail) {
  std::uint64_t min_length = params.at("min_length").get<std::uint64_t>();
  std::uint64_t limit = params.at("limit").get<std::uint64_t>();
  auto runs = find_regular(min_length, limit);
  std::vector<std::uint64_t> starts;
  for (const auto& m : runs) starts.push_back(m.start);
  std::string sem = expect.value("semantics", "exact");
  Json ja = Json::array();
  for (auto v : starts) ja.push_back(json_int(v));
  detail["found"] = ja;
  auto want = u64_list(expect.at("starts"));
  bool ok = sem == "contains" ? is_member_subset(want, starts) : starts == want;
  if (expect.contains("frozen")) ok = ok && starts == u64_list(expect.at("frozen"));
  return ok;
}

bool run_extend(const Json& params, const Json& expect, Json& detail) {
  std::uint64_t start = params.at("start").get<std::uint64_t>();
  RegularMultiplet m = extend_regular(start);
  detail["length"] = m.length;
  detail["last"] = m.members.empty() ? 0 : m.members.back();
  bool ok = m.length == expect.at("length").get<std::uint64_t>();
  if (expect.contains("last"))
    ok = ok && !m.members.empty() &&
         m.members.back() == expect.at("last").get<std::uint64_t>();
  if (expect.contains("min_length"))
    ok = m.length >= expect.at("min_length").get<std::uint64_t>();
  return ok;
}

bool run_family(const Json& params, const Json& expect, Json& detail) {
  FamilyTag tag;
  std::string kind = params.at("kind").get<std::string>();
  if (kind == "E") tag.kind = FamilyKind::E;
  else if (kind == "f") tag.kind = FamilyKind::f;
  else if (kind == "F") tag.kind = FamilyKind::F;
  else if (kind == "G") tag.kind = FamilyKind::G;
  else if (kind == "g") tag.kind = FamilyKind::g;
  else throw ValidationError("claim: unknown family kind " + kind);
  tag.p = params.value("p", 0);
  tag.q = params.value("q", 0);
  tag.d = params.value("d", 0);
  FamilyRun run = family_multiplet(tag);  // throws InvariantBreach on violation
  detail["size"] = run.values.size();
  bool ok = run.values.size() == expect.at("size").get<std::size_t>();
  if (expect.contains("values")) {
    ok = ok && run.values == u64_list(expect.at("values"));
  }
  return ok;
}

bool run_reach_list(const Json& params, const Json& expect, Json& detail) {
  (void)expect;
  std::uint64_t min_length = params.at("min_length").get<std::uint64_t>();
  Json lens = Json::object();
  bool ok = true;
  for (const auto& s : params.at("starts")) {
    std::uint64_t start = s.get<std::uint64_t>();
    RegularMultiplet m = extend_regular(start);
    lens[std::to_string(start)] = m.length;
    ok = ok && m.length >= min_length;
  }
  detail["lengths"] = lens;
  return ok;
}

PolySpec poly_from_json(const Json& coeffs) { return poly_from_coeffs(i64_list(coeffs)); }

bool run_poly_run(const Json& params, const Json& expect, Json& detail) {
  PrimeRunReport rep = prime_run(poly_from_json(params.at("coeffs")));
  detail = to_json(rep);
  bool ok = rep.run_length == expect.at("run_length").get<std::uint64_t>();
  if (expect.contains("optimal")) ok = ok && rep.optimal == expect.at("optimal").get<bool>();
  if (expect.contains("bioptimal"))
    ok = ok && rep.bioptimal == expect.at("bioptimal").get<bool>();
  if (expect.contains("repeating"))
    ok = ok && rep.repeating == expect.at("repeating").get<bool>();
  if (expect.contains("ascending"))
    ok = ok && rep.ascending == expect.at("ascending").get<bool>();
  if (expect.contains("negative_hit"))
    ok = ok && rep.negative_hit == expect.at("negative_hit").get<bool>();
  if (expect.contains("values")) {
    auto want = i64_list(expect.at("values"));
    ok = ok && rep.values == want;
  }
  if (expect.contains("values_at")) {
    // printed values occupying a sub-window of the run
    std::size_t off = expect.at("values_at").at("from").get<std::size_t>();
    auto want = i64_list(expect.at("values_at").at("values"));
    ok = ok && rep.values.size() >= off + want.size();
    for (std::size_t i = 0; ok && i < want.size(); ++i)
      ok = rep.values[off + i] == want[i];
  }
  if (expect.contains("window")) {
    auto w = i64_list(expect.at("window"));
    ok = ok && rep.window_lo == w.at(0) && rep.window_hi == w.at(1);
  }
  return ok;
}

bool run_poly_shift(const Json& params, const Json& expect, Json& detail) {
  PolySpec shifted = shift_poly(poly_from_json(params.at("coeffs")),
                                params.at("n").get<std::int64_t>());
  Json got = Json::array();
  for (int k = shifted.degree; k >= 0; --k) got.push_back(shifted.coeffs[k]);
  detail["coeffs"] = got;
  return shifted == poly_from_json(expect.at("coeffs"));
}

bool run_poly_construct(const Json& params, const Json& expect, Json& detail) {
  std::string fam = params.at("family").get<std::string>();
  PolyFamily kind = fam == "Q1"   ? PolyFamily::Q1
                    : fam == "C1" ? PolyFamily::C1
                                  : PolyFamily::C2;
  PolySpec p = construct_family(kind, params.value("p1", 0),
                                params.value("p2", 0), params.value("m", 0));
  Json got = Json::array();
  for (int k = p.degree; k >= 0; --k) got.push_back(p.coeffs[k]);
  detail["coeffs"] = got;
  return p == poly_from_json(expect.at("coeffs"));
}

bool run_poly_search(const Json& params, const Json& expect, Json& detail) {
  SearchConstraint c;
  c.p0 = params.at("p0").get<std::uint64_t>();
  c.degree = params.at("degree").get<int>();
  c.lead_lo = params.at("lead").at(0).get<std::int64_t>();
  c.lead_hi = params.at("lead").at(1).get<std::int64_t>();
  c.mid_lo = params.at("mid").at(0).get<std::int64_t>();
  c.mid_hi = params.at("mid").at(1).get<std::int64_t>();
  std::string req = params.at("require").get<std::string>();
  if (req == "optimal") c.require = Requirement::Optimal;
  else if (req == "bioptimal") c.require = Requirement::BiOptimal;
  else {
    c.require = Requirement::RunAtLeast;
    c.min_run = params.at("min_run").get<std::uint64_t>();
  }
  auto hits = search_polys(c);
  detail["hits"] = hits.size();
  Json top = Json::array();
  for (std::size_t i = 0; i < hits.size() && i < 8; ++i)
    top.push_back(to_json(hits[i]).at("poly"));
  detail["best"] = top;
  if (expect.contains("record_only") && expect.at("record_only").get<bool>()) {
    detail["observation"] =
        hits.empty() ? "no polynomial satisfies the requirement in this box"
                     : "requirement satisfiable in-box";
    return true;  // probe: result recorded, not asserted
  }
  if (expect.contains("contains")) {
    for (const auto& want : expect.at("contains")) {
      PolySpec w = poly_from_json(want);
      bool found = false;
      for (const auto& h : hits)
        if (h.poly == w) found = true;
      if (!found) {
        detail["missing"] = want;
        return false;
      }
    }
  }
  if (expect.contains("hits")) {
    if (hits.size() != expect.at("hits").get<std::size_t>()) return false;
  }
  return true;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"twin_witnesses", run_twin_witnesses},
      {"residue_conformance", run_residue_conformance},
      {"sixm_forms", run_sixm_forms},
      {"triplet_list", run_triplet_list},
      {"singlet", run_singlet},
      {"equal_gap_audit", run_equal_gap_audit},
      {"scan", run_scan},
      {"uniqueness", run_uniqueness},
      {"guard", run_guard},
      {"census", run_census},
      {"extend", run_extend},
      {"family", run_family},
      {"reach_list", run_reach_list},
      {"poly_run", run_poly_run},
      {"poly_shift", run_poly_shift},
      {"poly_construct", run_poly_construct},
      {"poly_search", run_poly_search},
  };
  return h;
}

}  // namespace

const char* to_string(ClaimRecord::Status s) {
  switch (s) {
    case ClaimRecord::Status::Pass: return "pass";
    case ClaimRecord::Status::Fail: return "fail";
    case ClaimRecord::Status::Skipped: return "skipped";
  }
  return "?";
}

const Json& claim_table() {
  static const Json table = [] {
    std::ifstream in(claims_path());
    if (!in) throw ValidationError("cannot open claim table: " + claims_path());
    Json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw ValidationError(std::string("claim table parse error: ") + e.what());
    }
    if (!j.is_array()) throw ValidationError("claim table must be a JSON array");
    return j;
  }();
  return table;
}

std::vector<ClaimRecord> run_claims(const std::string& filter) {
  std::vector<ClaimRecord> out;
  for (const auto& row : claim_table()) {
    std::string id = row.at("id").get<std::string>();
    if (!filter.empty() && id.rfind(filter, 0) != 0) continue;
    ClaimRecord rec;
    rec.claim_id = id;
    rec.command = row.value("command", "");
    rec.expected = row.at("expect").dump();
    try {
      auto it = handlers().find(row.at("kind").get<std::string>());
      if (it == handlers().end()) {
        rec.status = ClaimRecord::Status::Skipped;
        rec.detail["note"] = "no handler for kind";
      } else {
        bool ok = it->second(row.value("params", Json::object()),
                             row.at("expect"), rec.detail);
        rec.status = ok ? ClaimRecord::Status::Pass : ClaimRecord::Status::Fail;
      }
    } catch (const std::exception& e) {
      rec.status = ClaimRecord::Status::Fail;
      rec.detail["error"] = e.what();
    }
    if (row.contains("note")) rec.detail["note"] = row.at("note");
    out.push_back(std::move(rec));
  }
  return out;
}

Json to_json(const ClaimRecord& r) {
  Json j;
  j["claim_id"] = r.claim_id;
  j["command"] = r.command;
  j["expected"] = Json::parse(r.expected);
  j["status"] = to_string(r.status);
  j["detail"] = r.detail;
  return j;
}

}  // namespace primeplet
