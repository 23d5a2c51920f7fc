#pragma once

#include <vector>

#include "bwcv/bw_mes.hpp"
#include "bwcv/gcr.hpp"
#include "bwcv/types.hpp"

namespace bwcv {

struct BwGcrOutput {
  RandomizedCommittee lottery;  ///< every support committee contains trace.committee
  FractionalCommittee shares;
  GcrTrace trace;
  std::vector<Rational> budgets;  ///< per-voter budgets handed to the completion phase
  int residual_seats = 0;         ///< committee_size - |trace.committee|
};

/// Budgets for the completion phase. A retired voter in a unanimous group S
/// granted `depth` approvals gets max{0, k/n - depth/|S|}; voters never
/// retired split the remaining mass equally. The result sums exactly to the
/// number of residual seats. When every voter was retired but seats remain,
/// the leftover mass is split equally over all voters (the retired groups'
/// guarantees only improve with extra budget).
std::vector<Rational> assign_budgets(const Instance& instance, const GcrTrace& trace);

/// Full pipeline: greedy cohesive phase, per-voter budget assignment, then
/// the equal-shares completion on the remaining candidates; the cohesive
/// committee is merged into every support committee.
BwGcrOutput run_bw_gcr(const Instance& instance,
                       CompletionStrategy completion = CompletionStrategy::LexicographicGreedy);

}  // namespace bwcv
