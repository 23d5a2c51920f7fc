#pragma once

#include <cstdint>
#include <utility>

#include "bwcv/axioms.hpp"
#include "bwcv/types.hpp"

namespace bwcv {

struct GenParams {
  int num_voters = 0;
  int num_candidates = 0;
  int committee_size = 0;
  Rational density;  ///< per-candidate approval probability, in (0, 1]
  std::uint64_t seed = 0;
};

/// Random approval instance: every voter approves each candidate
/// independently with probability `density`, redrawing empty ballots.
/// Deterministic for a given seed across platforms (mt19937_64 draws compared
/// against an exact integer threshold). Throws ValidationError(BadParams).
Instance generate_instance(const GenParams& params);

/// Baseline rule: each voter names a favourite committee — her lowest-index
/// approved candidates, padded with lowest-index others — and the lottery
/// picks each voter's favourite with probability 1/n (identical committees
/// merged). Deterministic.
std::pair<FractionalCommittee, RandomizedCommittee> random_dictator(const Instance& instance);

/// Parses "1/2", "0.5" or "1" into an exact rational.
Rational parse_density(const std::string& text);

/// Enumeration limits, honoring the BWCV_MAX_N / BWCV_MAX_M environment
/// overrides.
SizeLimits size_limits_from_env();

}  // namespace bwcv
