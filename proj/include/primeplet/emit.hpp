#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "primeplet/multiplet.hpp"
#include "primeplet/polylab.hpp"
#include "primeplet/special_forms.hpp"
#include "primeplet/triplet.hpp"
#include "primeplet/twin.hpp"

namespace primeplet {

inline constexpr const char* kToolVersion = "0.1.0";

// Keys keep insertion order; json-lines is the canonical machine format:
// one object per line, UTF-8, fixed key order per record type.
using Json = nlohmann::ordered_json;

/// Integers with |v| < 2^53 render as JSON numbers, larger ones as decimal
/// strings (consumers must not lose precision to doubles).
Json json_int(const Big& v);
Json json_int(std::uint64_t v);
Json json_int(std::int64_t v);

Json to_json(const TwinPair& p);       // p_i, p_f, D, class, a, median, residues
Json to_json(const Triplet& t);
Json to_json(const SpecialFormRecord& r);
Json to_json(const GuardReport& r);
Json to_json(const AuditReport& r);
Json to_json(const RegularMultiplet& m);
Json to_json(const AlmostRegularMultiplet& m);
Json to_json(const FamilyRun& f);
Json to_json(const PrimeRunReport& r);

enum class Format { JsonLines, Csv, Table };

/// Serializes homogeneous flat records. Order of writes is the order of
/// output; a record whose key set differs from the first one is a
/// ValidationError ("mixed record types").
class Emitter {
 public:
  Emitter(std::ostream& os, Format fmt);
  ~Emitter();

  void write(const Json& record);
  std::size_t count() const { return count_; }
  void finish();  // flush footers (tables); idempotent

 private:
  std::ostream& os_;
  Format fmt_;
  std::size_t count_ = 0;
  bool finished_ = false;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;  // Table mode buffers
};

/// Run metadata; written to a separate stream (stderr) so result bytes stay
/// deterministic.
struct RunManifest {
  std::string command;
  std::string config_hash;
  std::string tool_version = kToolVersion;
  std::string started;
  std::string finished;
  std::uint64_t result_count = 0;
  bool probable_prime_used = false;
};

std::string iso8601_now();
std::string config_hash(const std::vector<std::string>& args);
Json to_json(const RunManifest& m);

}  // namespace primeplet
