#include "primeplet/emit.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "primeplet/errors.hpp"

namespace primeplet {

namespace {

constexpr std::int64_t kJsonIntMax = 9007199254740992;  // 2^53

std::string csv_cell(const Json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ';';
      s += csv_cell(v[i]);
    }
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char ch : s) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    quoted += '"';
    return quoted;
  }
  return s;
}

}  // namespace

Json json_int(const Big& v) {
  if (v >= -Big(kJsonIntMax) && v <= Big(kJsonIntMax)) {
    return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
  }
  return dec(v);
}

Json json_int(std::uint64_t v) {
  if (v < static_cast<std::uint64_t>(kJsonIntMax)) return v;
  return std::to_string(v);
}

Json json_int(std::int64_t v) {
  if (v > -kJsonIntMax && v < kJsonIntMax) return v;
  return std::to_string(v);
}

Json to_json(const TwinPair& p) {
  Json j;
  j["p_i"] = json_int(p.p_i);
  j["p_f"] = json_int(p.p_f);
  j["D"] = json_int(p.D);
  j["class"] = to_string(p.label);
  j["a"] = json_int(p.a);
  j["median"] = json_int(p.median);
  if (p.label != ClassLabel::Special && p.p_i != 3) {
    ResidueSignature sig = residue_signature(p);
    j["residues"] = Json::array({sig.pi_mod6, sig.pf_mod6});
  } else {
    j["residues"] = Json::array();
  }
  return j;
}

Json to_json(const Triplet& t) {
  Json j;
  j["p_i"] = json_int(t.p_i);
  j["p_m"] = json_int(t.p_m);
  j["p_f"] = json_int(t.p_f);
  j["d1"] = json_int(t.d1);
  j["d2"] = json_int(t.d2);
  j["classes"] = Json::array({to_string(t.c1), to_string(t.c2)});
  j["outer_class"] = to_string(t.outer);
  j["singlet"] = t.singlet;
  j["a"] = json_int(t.a);
  j["b"] = json_int(t.b);
  return j;
}

Json to_json(const SpecialFormRecord& r) {
  Json j;
  j["form"] = to_string(r.kind);
  j["exponent"] = json_int(r.exponent);
  j["anchor"] = json_int(r.anchor);
  Json offs = Json::array();
  for (auto k : r.offsets) offs.push_back(k);
  j["offsets"] = offs;
  Json mems = Json::array(), verd = Json::array(), labs = Json::array();
  for (const auto& m : r.members) mems.push_back(json_int(m));
  for (auto v : r.verdicts) verd.push_back(to_string(v));
  for (auto l : r.labels) labs.push_back(to_string(l));
  j["members"] = mems;
  j["verdicts"] = verd;
  j["classes"] = labs;
  j["probable"] = r.probable;
  return j;
}

Json to_json(const GuardReport& r) {
  Json j;
  j["guard"] = r.id;
  j["law"] = r.law;
  j["checked"] = json_int(r.checked);
  j["skipped"] = json_int(r.skipped);
  Json cx = Json::array();
  for (auto e : r.counterexamples) cx.push_back(json_int(e));
  j["counterexamples"] = cx;
  j["ok"] = r.ok();
  return j;
}

Json to_json(const AuditReport& r) {
  Json j;
  j["claim"] = r.id;
  j["bound"] = json_int(r.bound);
  Json w = Json::array(), e = Json::array();
  for (auto x : r.witnesses) w.push_back(json_int(x));
  for (auto x : r.expected) e.push_back(json_int(x));
  j["witnesses"] = w;
  j["expected"] = e;
  j["probable_used"] = r.probable_used;
  j["ok"] = r.ok();
  return j;
}

Json to_json(const RegularMultiplet& m) {
  Json j;
  j["start"] = json_int(m.start);
  j["length"] = json_int(m.length);
  Json mem = Json::array();
  for (auto v : m.members) mem.push_back(json_int(v));
  j["members"] = mem;
  j["maximal"] = m.maximal;
  j["family"] = m.family.empty() ? Json() : Json(m.family);
  return j;
}

Json to_json(const AlmostRegularMultiplet& m) {
  Json j;
  j["start"] = json_int(m.start);
  j["span"] = json_int(m.span);
  Json mem = Json::array(), mis = Json::array();
  for (auto v : m.members) mem.push_back(json_int(v));
  for (auto v : m.missing_indices) mis.push_back(json_int(v));
  j["members"] = mem;
  j["missing_indices"] = mis;
  return j;
}

Json to_json(const FamilyRun& f) {
  Json j;
  j["family"] = to_string(f.tag.kind);
  switch (f.tag.kind) {
    case FamilyKind::G:
      j["p"] = json_int(f.tag.p);
      j["q"] = json_int(f.tag.q);
      break;
    case FamilyKind::g:
      j["d"] = json_int(f.tag.d);
      break;
    default:
      j["p"] = json_int(f.tag.p);
  }
  Json xs = Json::array(), vals = Json::array();
  for (auto x : f.xs) xs.push_back(x);
  for (auto v : f.values) vals.push_back(json_int(v));
  j["x"] = xs;
  j["values"] = vals;
  j["distance_law"] = f.distance_law;
  return j;
}

Json to_json(const PrimeRunReport& r) {
  Json j;
  j["poly"] = r.poly.text();
  Json coeffs = Json::array();
  for (int k = r.poly.degree; k >= 0; --k) coeffs.push_back(r.poly.coeffs[k]);
  j["coeffs"] = coeffs;
  j["p0"] = json_int(r.poly.p0());
  j["run_length"] = json_int(r.run_length);
  Json vals = Json::array();
  for (auto v : r.values) vals.push_back(json_int(v));
  j["values"] = vals;
  j["optimal"] = r.optimal;
  j["near_optimal"] = r.near_optimal;
  j["bioptimal"] = r.bioptimal;
  j["repeating"] = r.repeating;
  j["ascending"] = r.ascending;
  j["negative_hit"] = r.negative_hit;
  j["window"] = Json::array({r.window_lo, r.window_hi});
  j["distance_law"] = r.distance_law;
  return j;
}

Emitter::Emitter(std::ostream& os, Format fmt) : os_(os), fmt_(fmt) {}

Emitter::~Emitter() {
  try {
    finish();
  } catch (...) {
  }
}

void Emitter::write(const Json& record) {
  if (!record.is_object()) throw ValidationError("emit: records must be objects");
  std::vector<std::string> keys;
  for (auto it = record.begin(); it != record.end(); ++it) keys.push_back(it.key());
  if (count_ == 0) {
    columns_ = keys;
    if (fmt_ == Format::Csv) {
      for (std::size_t i = 0; i < columns_.size(); ++i)
        os_ << (i ? "," : "") << columns_[i];
      os_ << "\n";
    }
  } else if (keys != columns_) {
    throw ValidationError("emit: mixed record types in one stream");
  }
  ++count_;
  switch (fmt_) {
    case Format::JsonLines:
      os_ << record.dump() << "\n";
      break;
    case Format::Csv: {
      std::size_t i = 0;
      for (const auto& col : columns_) {
        os_ << (i++ ? "," : "") << csv_cell(record.at(col));
      }
      os_ << "\n";
      break;
    }
    case Format::Table: {
      std::vector<std::string> row;
      for (const auto& col : columns_) {
        const Json& v = record.at(col);
        row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      }
      rows_.push_back(std::move(row));
      break;
    }
  }
}

void Emitter::finish() {
  if (finished_) return;
  finished_ = true;
  if (fmt_ != Format::Table || columns_.empty()) return;
  std::vector<std::size_t> width(columns_.size());
  for (std::size_t i = 0; i < columns_.size(); ++i) width[i] = columns_[i].size();
  for (const auto& row : rows_)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  for (std::size_t i = 0; i < columns_.size(); ++i)
    os_ << std::left << std::setw(static_cast<int>(width[i]) + 2) << columns_[i];
  os_ << "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os_ << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
    os_ << "\n";
  }
}

std::string iso8601_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string config_hash(const std::vector<std::string>& args) {
  // FNV-1a over the canonicalized argument list
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& a : args) {
    for (unsigned char c : a) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0x1f;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << h;
  return os.str();
}

Json to_json(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  j["config_hash"] = m.config_hash;
  j["tool_version"] = m.tool_version;
  j["started"] = m.started;
  j["finished"] = m.finished;
  j["result_count"] = json_int(m.result_count);
  j["probable_prime_used"] = m.probable_prime_used;
  return j;
}

}  // namespace primeplet
