#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bwcv/axioms.hpp"
#include "bwcv/gcr.hpp"
#include "bwcv/types.hpp"

namespace bwcv {

// File formats. Instances and reports are JSON documents with
// alphabetically sorted keys, rationals as exact "numerator/denominator"
// strings and candidate/voter indices 1-based. Writing is canonical:
// write(parse(text)) == text for files this library produced.

/// Canonical instance document, e.g.
/// {"ballots":[[1,2],[2]],"k":1,"m":2,"n":2}.
std::string write_instance(const Instance& instance);

/// Parses and validates an instance document. Throws ValidationError on
/// invariant violations, std::invalid_argument on malformed JSON.
Instance parse_instance(const std::string& text);

/// FNV-1a hash of the canonical instance document, 16 hex digits.
std::string instance_digest(const Instance& instance);

/// Interoperability: one ballot per line, whitespace-separated 1-based
/// candidate indices. The candidate count defaults to the largest index seen.
Instance instance_from_ballot_lines(const std::string& text, int committee_size,
                                    std::optional<int> num_candidates = std::nullopt);

/// Everything a rule run produces, in one verifiable document.
struct RunReport {
  std::string rule;
  std::string digest;  ///< digest of the instance the run used
  int num_voters = 0;
  int num_candidates = 0;
  int committee_size = 0;
  FractionalCommittee shares;
  RandomizedCommittee lottery;

  std::optional<std::string> completion;                               ///< bw-mes, bw-gcr
  std::optional<std::vector<int>> committee;                           ///< mes, gcr, bw-mes, bw-gcr
  std::optional<std::vector<std::pair<int, Rational>>> purchase_order; ///< mes
  std::optional<std::vector<CohesiveGroup>> trace;                     ///< gcr, bw-gcr
  std::optional<std::vector<Rational>> budgets;                        ///< bw-gcr
  std::optional<int> residual_seats;                                   ///< bw-gcr

  std::map<std::string, Verdict> verdicts;
  std::int64_t timing_ms = 0;
};

std::string write_report(const RunReport& report);
RunReport parse_report(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bwcv
