#pragma once

#include <vector>

#include "bwcv/types.hpp"

namespace bwcv {

/// Checks raw election data (with 1-based candidate indices, as read from a
/// file) against the Instance invariants and returns the 0-based Instance.
/// Throws ValidationError: EmptyBallot, KZero, KTooLarge, CandidateOutOfRange,
/// BallotCountMismatch.
Instance validate_instance(int num_voters, int num_candidates, int committee_size,
                           const std::vector<std::vector<int>>& one_based_ballots);

/// Expected number of approved candidates voter i sees selected:
/// sum of shares over the voter's ballot. Throws std::out_of_range for a bad
/// voter index.
Rational utility(const Instance& instance, int voter, const FractionalCommittee& shares);

/// Partitions `voters` into maximal groups with identical ballots. Groups are
/// ordered by their smallest member; members are sorted ascending.
std::vector<std::vector<int>> unanimous_partition(const std::vector<int>& voters,
                                                  const Instance& instance);

/// The fractional committee a lottery implements: per-candidate selection
/// probability, i.e. the probability-weighted sum of committee indicators.
FractionalCommittee marginals(const RandomizedCommittee& lottery, int num_candidates);

/// Voters approving `candidate`, ascending.
std::vector<int> approvers(const Instance& instance, int candidate);

/// |a ∩ b| for sorted vectors.
int intersection_size(const std::vector<int>& a, const std::vector<int>& b);

/// True iff sorted vector `a` is a subset of sorted vector `b`.
bool is_subset(const std::vector<int>& a, const std::vector<int>& b);

/// Throws ValidationError(InvalidFractional) unless every share is in [0,1]
/// and the shares sum exactly to `expected_total`.
void require_fractional(const FractionalCommittee& shares, const Rational& expected_total);

/// Throws std::logic_error unless probabilities are positive and sum to 1,
/// committees all have `expected_size` members, and support committees are
/// pairwise distinct and sorted.
void require_randomized(const RandomizedCommittee& lottery, int expected_size);

/// Sorts entries lexicographically by committee and merges duplicates by
/// summing probabilities; drops zero-probability entries.
RandomizedCommittee normalized(RandomizedCommittee lottery);

}  // namespace bwcv
