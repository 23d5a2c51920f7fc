#pragma once

#include <optional>
#include <vector>

#include "bwcv/types.hpp"

namespace bwcv {

/// One greedy step: `voters` all approve at least `depth` members of
/// `candidates`, and the group is large enough to deserve |candidates| seats
/// (|voters| >= |candidates| * num_voters / committee_size).
struct CohesiveGroup {
  int depth = 0;                ///< guaranteed approvals per member within `candidates`
  std::vector<int> candidates;  ///< sorted ascending
  std::vector<int> voters;      ///< sorted ascending
};

struct GcrTrace {
  std::vector<CohesiveGroup> steps;
  std::vector<int> committee;       ///< union of step candidate sets, sorted
  std::vector<int> covered_voters;  ///< union of step voter sets, sorted
};

/// Exhaustive search for the best remaining cohesive group among `active`
/// voters and `available` candidates: maximize depth, then prefer fewer
/// candidates, then more voters, then the lexicographically smallest
/// candidate set. The voter set is always taken maximal (every qualifying
/// active voter is included). Returns nullopt when no group qualifies.
/// Cost grows with the number of candidate subsets of size up to
/// committee_size; intended for instances with at most about a dozen
/// candidates.
std::optional<CohesiveGroup> find_best_cohesive_group(const Instance& instance,
                                                      const std::vector<int>& active,
                                                      const std::vector<int>& available);

/// Greedy loop: repeatedly take the best cohesive group, grant its candidate
/// set, retire its voters; stop when no group qualifies. The committee may
/// have fewer seats than the instance's committee size; callers complete it.
GcrTrace run_gcr(const Instance& instance);

}  // namespace bwcv
