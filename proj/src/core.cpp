#include "bwcv/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace bwcv {

bool IntegralCommittee::contains(int candidate) const {
  return std::binary_search(members.begin(), members.end(), candidate);
}

Rational FractionalCommittee::total() const {
  Rational sum;
  for (const auto& s : shares) sum += s;
  return sum;
}

Instance validate_instance(int num_voters, int num_candidates, int committee_size,
                           const std::vector<std::vector<int>>& one_based_ballots) {
  using Code = ValidationError::Code;
  if (num_voters <= 0 || num_candidates <= 0) {
    throw ValidationError(Code::BadParams, "instance needs at least one voter and one candidate");
  }
  if (committee_size <= 0) {
    throw ValidationError(Code::KZero, "committee size must be positive");
  }
  if (committee_size > num_candidates) {
    throw ValidationError(Code::KTooLarge,
                          "committee size " + std::to_string(committee_size) + " exceeds " +
                              std::to_string(num_candidates) + " candidates");
  }
  if (static_cast<int>(one_based_ballots.size()) != num_voters) {
    throw ValidationError(Code::BallotCountMismatch,
                          "expected " + std::to_string(num_voters) + " ballots, got " +
                              std::to_string(one_based_ballots.size()));
  }

  Instance instance;
  instance.num_voters = num_voters;
  instance.num_candidates = num_candidates;
  instance.committee_size = committee_size;
  instance.ballots.reserve(num_voters);
  for (int i = 0; i < num_voters; ++i) {
    std::set<int> ballot;
    for (int candidate : one_based_ballots[i]) {
      if (candidate < 1 || candidate > num_candidates) {
        throw ValidationError(Code::CandidateOutOfRange,
                              "voter " + std::to_string(i + 1) + " approves candidate " +
                                  std::to_string(candidate) + " outside 1.." +
                                  std::to_string(num_candidates),
                              i);
      }
      ballot.insert(candidate - 1);
    }
    if (ballot.empty()) {
      throw ValidationError(Code::EmptyBallot, "voter " + std::to_string(i + 1) + " has an empty ballot", i);
    }
    instance.ballots.emplace_back(ballot.begin(), ballot.end());
  }
  return instance;
}

Rational utility(const Instance& instance, int voter, const FractionalCommittee& shares) {
  if (voter < 0 || voter >= instance.num_voters) {
    throw std::out_of_range("utility: voter index " + std::to_string(voter));
  }
  Rational sum;
  for (int candidate : instance.ballots[voter]) sum += shares[candidate];
  return sum;
}

std::vector<std::vector<int>> unanimous_partition(const std::vector<int>& voters,
                                                  const Instance& instance) {
  std::map<std::vector<int>, std::vector<int>> by_ballot;
  for (int voter : voters) by_ballot[instance.ballots.at(voter)].push_back(voter);

  std::vector<std::vector<int>> groups;
  groups.reserve(by_ballot.size());
  for (auto& [ballot, members] : by_ballot) {
    std::sort(members.begin(), members.end());
    groups.push_back(std::move(members));
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

FractionalCommittee marginals(const RandomizedCommittee& lottery, int num_candidates) {
  FractionalCommittee result;
  result.shares.assign(num_candidates, Rational(0));
  for (const auto& entry : lottery.entries) {
    for (int candidate : entry.committee.members) {
      result.shares.at(candidate) += entry.probability;
    }
  }
  return result;
}

std::vector<int> approvers(const Instance& instance, int candidate) {
  std::vector<int> result;
  for (int i = 0; i < instance.num_voters; ++i) {
    if (std::binary_search(instance.ballots[i].begin(), instance.ballots[i].end(), candidate)) {
      result.push_back(i);
    }
  }
  return result;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  auto it_a = a.begin();
  auto it_b = b.begin();
  while (it_a != a.end() && it_b != b.end()) {
    if (*it_a < *it_b) {
      ++it_a;
    } else if (*it_b < *it_a) {
      ++it_b;
    } else {
      ++count;
      ++it_a;
      ++it_b;
    }
  }
  return count;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void require_fractional(const FractionalCommittee& shares, const Rational& expected_total) {
  Rational sum;
  for (std::size_t c = 0; c < shares.shares.size(); ++c) {
    const Rational& share = shares.shares[c];
    if (share < Rational(0) || share > Rational(1)) {
      throw ValidationError(ValidationError::Code::InvalidFractional,
                            "share " + share.str() + " of candidate " + std::to_string(c + 1) +
                                " outside [0,1]",
                            static_cast<int>(c));
    }
    sum += share;
  }
  if (sum != expected_total) {
    throw ValidationError(ValidationError::Code::InvalidFractional,
                          "shares sum to " + sum.str() + ", expected " + expected_total.str());
  }
}

void require_randomized(const RandomizedCommittee& lottery, int expected_size) {
  Rational total;
  for (const auto& entry : lottery.entries) {
    if (!(entry.probability > Rational(0))) {
      throw std::logic_error("lottery entry with non-positive probability");
    }
    if (entry.committee.size() != expected_size) {
      throw std::logic_error("lottery committee of size " + std::to_string(entry.committee.size()) +
                             ", expected " + std::to_string(expected_size));
    }
    if (!std::is_sorted(entry.committee.members.begin(), entry.committee.members.end())) {
      throw std::logic_error("lottery committee not sorted");
    }
    total += entry.probability;
  }
  if (total != Rational(1)) {
    throw std::logic_error("lottery probabilities sum to " + total.str());
  }
  for (std::size_t j = 1; j < lottery.entries.size(); ++j) {
    if (!(lottery.entries[j - 1].committee < lottery.entries[j].committee)) {
      throw std::logic_error("lottery support not sorted/distinct");
    }
  }
}

RandomizedCommittee normalized(RandomizedCommittee lottery) {
  std::map<IntegralCommittee, Rational> merged;
  for (auto& entry : lottery.entries) merged[entry.committee] += entry.probability;

  RandomizedCommittee result;
  result.entries.reserve(merged.size());
  for (auto& [committee, probability] : merged) {
    if (probability.is_zero()) continue;
    result.entries.push_back({probability, committee});
  }
  return result;
}

}  // namespace bwcv
