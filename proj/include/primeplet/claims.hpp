#pragma once

#include <string>
#include <vector>

#include "primeplet/emit.hpp"

namespace primeplet {

// One reproducible check from the shipped claim table (data/claims.json).
// Each table row carries the command that reproduces it, the expectation,
// and a source anchor in its metadata.
struct ClaimRecord {
  enum class Status { Pass, Fail, Skipped };

  std::string claim_id;
  std::string command;
  std::string expected;
  Status status = Status::Skipped;
  Json detail;  // outcome payload (found values, extras, notes)
};

const char* to_string(ClaimRecord::Status s);

/// The claim table as shipped (parse errors throw ValidationError).
const Json& claim_table();

/// Executes every claim whose id starts with `filter` (empty = all),
/// in table order. A filter matching nothing yields an empty list.
std::vector<ClaimRecord> run_claims(const std::string& filter = "");

Json to_json(const ClaimRecord& r);

}  // namespace primeplet
