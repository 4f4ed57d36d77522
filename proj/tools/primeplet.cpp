// primeplet — classify prime pairs and triplets, scan Mersenne/Fermat
// companions, hunt regular multiplets, and audit prime-generating
// polynomials. Results stream to stdout (json-lines/csv/table); a run
// manifest goes to stderr.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "primeplet/claims.hpp"
#include "primeplet/emit.hpp"
#include "primeplet/errors.hpp"

namespace pp = primeplet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct GlobalOpts {
  bool json = false, csv = false, table = false;
  unsigned threads = 1;
  bool seedless = false;  // reserved; nothing here randomizes

  pp::Format format() const {
    if (csv) return pp::Format::Csv;
    if (table) return pp::Format::Table;
    return pp::Format::JsonLines;
  }
};

std::int64_t parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw pp::ValidationError("not an integer: " + s);
    return v;
  } catch (const pp::ValidationError&) {
    throw;
  } catch (const std::exception&) {
    throw pp::ValidationError("not an integer: " + s);
  }
}

std::vector<std::int64_t> parse_offsets(const std::string& s) {
  std::vector<std::int64_t> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(parse_int(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  auto pos = s.find(':');
  if (pos == std::string::npos)
    throw pp::ValidationError("range must look like lo:hi");
  return {parse_int(s.substr(0, pos)), parse_int(s.substr(pos + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regularities of twin, triplet and multiplet primes"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.json, "json-lines output (default)");
  app.add_flag("--csv", g.csv, "csv output");
  app.add_flag("--table", g.table, "aligned table output");
  app.add_option("--threads", g.threads, "worker threads for searches")
      ->default_val(1);
  app.add_flag("--seedless", g.seedless, "reserved (no randomization exists)");

  // twins
  auto* twins = app.add_subcommand("twins", "prime pairs at fixed distance");
  std::uint64_t twin_distance = 2, twin_limit = 100;
  twins->add_option("--distance", twin_distance, "pair distance 2D (even)")->required();
  twins->add_option("--limit", twin_limit, "upper bound on members")->required();

  // triplets
  auto* trip = app.add_subcommand("triplets", "prime triplets at a gap pair");
  std::string trip_gaps = "2,4";
  std::uint64_t trip_limit = 100;
  bool singlets_only = false;
  trip->add_option("--gaps", trip_gaps, "gap pair, e.g. 2,4")->required();
  trip->add_option("--limit", trip_limit, "upper bound on members")->required();
  trip->add_flag("--singlets-only", singlets_only, "report only singlets");

  // mersenne / fermat scans
  auto* mers = app.add_subcommand("mersenne", "companions of 2^p-1 over prime p");
  std::string mers_offsets = "+4";
  std::uint64_t mers_max = 31;
  mers->add_option("--offsets", mers_offsets, "even offsets from 2^p-1, e.g. +4,+10")
      ->required();
  mers->add_option("--max-p", mers_max, "largest exponent p")->required();

  auto* ferm = app.add_subcommand("fermat", "companions of 2^(2^n)+1");
  std::string ferm_offsets = "+6";
  std::uint64_t ferm_max = 4;
  ferm->add_option("--offsets", ferm_offsets, "even offsets from 2^(2^n)+1")->required();
  ferm->add_option("--max-n", ferm_max, "largest index n")->required();

  // guards
  auto* guards = app.add_subcommand("guards", "verify divisibility guards");
  bool verify_all = false;
  std::string guard_id;
  std::uint64_t guard_pmax = 1000, guard_nmax = 8;
  guards->add_flag("--verify-all", verify_all, "run the whole guard table");
  guards->add_option("--id", guard_id, "verify one guard");
  guards->add_option("--max-p", guard_pmax, "Mersenne exponent bound");
  guards->add_option("--max-n", guard_nmax, "Fermat index bound");

  // multiplets
  auto* mult = app.add_subcommand("multiplets", "regular prime multiplets");
  std::uint64_t mult_min = 6, mult_limit = 600000, mult_almost = 0;
  mult->add_option("--min-length", mult_min, "minimum run length")->required();
  mult->add_option("--limit", mult_limit, "largest start")->required();
  mult->add_option("--almost", mult_almost, "allow up to k missing members (k <= 2)");

  // family (quadratic multiplet families)
  auto* fam = app.add_subcommand("family", "evaluate a multiplet family");
  std::string fam_kind = "E";
  std::uint64_t fam_p = 0, fam_q = 0, fam_d = 0;
  fam->add_option("--kind", fam_kind, "E | f | F | G | g")->required();
  fam->add_option("--p", fam_p, "prime parameter (E,f,F,G)");
  fam->add_option("--q", fam_q, "second prime (G)");
  fam->add_option("--d", fam_d, "discriminant-like parameter (g)");

  // poly
  auto* poly = app.add_subcommand("poly", "prime-generating polynomial lab");
  poly->require_subcommand(1);
  auto* poly_run_cmd = poly->add_subcommand("run", "audit a polynomial's prime run");
  std::string run_coeffs;
  poly_run_cmd->add_option("--coeffs", run_coeffs, "coefficients, highest degree first")
      ->required();
  auto* poly_search_cmd = poly->add_subcommand("search", "exhaustive coefficient box");
  std::uint64_t search_p0 = 13;
  int search_degree = 2;
  std::string lead_range = "1:2", mid_range = "-30:30", require = "optimal";
  std::uint64_t min_run = 0;
  poly_search_cmd->add_option("--p0", search_p0, "|P(0)| (prime)")->required();
  poly_search_cmd->add_option("--degree", search_degree, "2 or 3")->required();
  poly_search_cmd->add_option("--leading-range", lead_range, "lo:hi");
  poly_search_cmd->add_option("--middle-range", mid_range, "lo:hi")->required();
  poly_search_cmd->add_option("--require", require, "optimal | bioptimal | run");
  poly_search_cmd->add_option("--min-run", min_run, "for --require run");
  auto* poly_family_cmd = poly->add_subcommand("family", "constructed polynomials");
  std::string pf_kind = "Q1";
  std::int64_t pf_p1 = 0, pf_p2 = 0, pf_m = 0;
  poly_family_cmd->add_option("--kind", pf_kind, "Q1 | C1 | C2")->required();
  poly_family_cmd->add_option("--p1", pf_p1, "P(1)")->required();
  poly_family_cmd->add_option("--p2", pf_p2, "P(2) (C2)");
  poly_family_cmd->add_option("--m", pf_m, "free quadratic coefficient (C1)");

  // claims
  auto* claims_cmd = app.add_subcommand("claims", "run the shipped claim table");
  std::string claim_filter;
  claims_cmd->add_option("--filter", claim_filter, "claim-id prefix");

  // global flags (--json, --threads, ...) may follow the subcommand
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->fallthrough();
    for (CLI::App* inner : sub->get_subcommands([](CLI::App*) { return true; }))
      inner->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  pp::RunManifest manifest;
  for (int i = 0; i < argc; ++i) manifest.command += (i ? " " : "") + std::string(argv[i]);
  manifest.config_hash =
      pp::config_hash(std::vector<std::string>(argv + 1, argv + argc));
  manifest.started = pp::iso8601_now();

  int exit_code = kExitOk;
  try {
    pp::Emitter emit(std::cout, g.format());

    if (*twins) {
      if (twin_distance % 2 != 0)
        throw pp::ValidationError("--distance must be even (2D)");
      for (const auto& p : pp::enumerate_twins(twin_distance / 2, twin_limit)) {
        emit.write(pp::to_json(p));
      }
    } else if (*trip) {
      auto gaps = parse_offsets(trip_gaps);
      if (gaps.size() != 2 || gaps[0] <= 0 || gaps[1] <= 0 ||
          gaps[0] % 2 != 0 || gaps[1] % 2 != 0)
        throw pp::ValidationError("--gaps must be two even positive numbers");
      for (const auto& t : pp::enumerate_triplets(
               static_cast<std::uint64_t>(gaps[0]) / 2,
               static_cast<std::uint64_t>(gaps[1]) / 2, trip_limit)) {
        if (singlets_only && !t.singlet) continue;
        emit.write(pp::to_json(t));
      }
    } else if (*mers) {
      for (const auto& r :
           pp::mersenne_scan(parse_offsets(mers_offsets), mers_max, g.threads)) {
        manifest.probable_prime_used |= r.probable;
        emit.write(pp::to_json(r));
      }
    } else if (*ferm) {
      for (const auto& r :
           pp::fermat_scan(parse_offsets(ferm_offsets), ferm_max, g.threads)) {
        manifest.probable_prime_used |= r.probable;
        emit.write(pp::to_json(r));
      }
    } else if (*guards) {
      if (!verify_all && guard_id.empty())
        throw pp::ValidationError("guards: pass --verify-all or --id");
      bool all_ok = true;
      if (verify_all) {
        for (const auto& rep : pp::verify_all_guards(guard_pmax, guard_nmax)) {
          all_ok = all_ok && rep.ok();
          emit.write(pp::to_json(rep));
        }
      } else {
        const auto& gd = pp::find_guard(guard_id);
        std::vector<std::uint64_t> es;
        std::uint64_t bound = gd.kind == pp::FormKind::Mersenne ? guard_pmax : guard_nmax;
        for (std::uint64_t e = 0; e <= bound; ++e) {
          if (gd.kind == pp::FormKind::Fermat || pp::is_prime_u64(e)) es.push_back(e);
        }
        auto rep = pp::verify_guard(gd, es);
        all_ok = rep.ok();
        emit.write(pp::to_json(rep));
      }
      if (!all_ok) exit_code = kExitClaimFailure;
    } else if (*mult) {
      if (mult_almost == 0) {
        for (const auto& m : pp::find_regular(mult_min, mult_limit, g.threads))
          emit.write(pp::to_json(m));
      } else {
        for (const auto& m :
             pp::find_almost_regular(mult_min, mult_limit, mult_almost))
          emit.write(pp::to_json(m));
      }
    } else if (*fam) {
      pp::FamilyTag tag;
      if (fam_kind == "E") tag.kind = pp::FamilyKind::E;
      else if (fam_kind == "f") tag.kind = pp::FamilyKind::f;
      else if (fam_kind == "F") tag.kind = pp::FamilyKind::F;
      else if (fam_kind == "G") tag.kind = pp::FamilyKind::G;
      else if (fam_kind == "g") tag.kind = pp::FamilyKind::g;
      else throw pp::ValidationError("family: unknown kind " + fam_kind);
      tag.p = fam_p;
      tag.q = fam_q;
      tag.d = fam_d;
      emit.write(pp::to_json(pp::family_multiplet(tag)));
    } else if (*poly) {
      if (*poly_run_cmd) {
        emit.write(pp::to_json(pp::prime_run(pp::poly_from_coeffs(parse_offsets(run_coeffs)))));
      } else if (*poly_search_cmd) {
        pp::SearchConstraint c;
        c.p0 = search_p0;
        c.degree = search_degree;
        std::tie(c.lead_lo, c.lead_hi) = parse_range(lead_range);
        std::tie(c.mid_lo, c.mid_hi) = parse_range(mid_range);
        if (require == "optimal") c.require = pp::Requirement::Optimal;
        else if (require == "bioptimal") c.require = pp::Requirement::BiOptimal;
        else if (require == "run") {
          c.require = pp::Requirement::RunAtLeast;
          c.min_run = min_run;
        } else throw pp::ValidationError("--require must be optimal|bioptimal|run");
        for (const auto& rep : pp::search_polys(c)) emit.write(pp::to_json(rep));
      } else if (*poly_family_cmd) {
        pp::PolyFamily kind = pf_kind == "Q1"   ? pp::PolyFamily::Q1
                              : pf_kind == "C1" ? pp::PolyFamily::C1
                              : pf_kind == "C2"
                                  ? pp::PolyFamily::C2
                                  : throw pp::ValidationError("poly family: Q1|C1|C2");
        auto spec = pp::construct_family(kind, pf_p1, pf_p2, pf_m);
        emit.write(pp::to_json(pp::prime_run(spec)));
      }
    } else if (*claims_cmd) {
      bool any_fail = false;
      for (const auto& rec : pp::run_claims(claim_filter)) {
        any_fail = any_fail || rec.status == pp::ClaimRecord::Status::Fail;
        if (rec.detail.contains("probable_used") &&
            rec.detail.at("probable_used").is_boolean())
          manifest.probable_prime_used |= rec.detail.at("probable_used").get<bool>();
        emit.write(pp::to_json(rec));
      }
      if (any_fail) exit_code = kExitClaimFailure;
    }

    emit.finish();
    manifest.result_count = emit.count();
  } catch (const pp::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    exit_code = kExitCapacity;
  } catch (const pp::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    exit_code = kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    exit_code = kExitClaimFailure;
  }

  manifest.finished = pp::iso8601_now();
  std::cerr << pp::to_json(manifest).dump() << "\n";
  return exit_code;
}
