#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bwcv/core.hpp"
#include "bwcv/harness.hpp"
#include "bwcv/types.hpp"

namespace bwcv::testing {

inline Instance make_instance(int n, int m, int k, const std::vector<std::vector<int>>& ballots) {
  return validate_instance(n, m, k, ballots);
}

/// 8 voters, 4 candidates, 3 seats. Two rounds of buying select c3 then c1;
/// the completed shares are (1, 19/40, 1, 21/40). Used as the hand-checked
/// trace regression throughout.
inline Instance eight_voter_two_round() {
  return make_instance(8, 4, 3,
                       {{3, 4}, {3, 4}, {3, 4}, {1, 2}, {1, 2}, {1, 3}, {1, 3}, {2, 4}});
}

/// 3 voters, 2 seats; voters 1 and 2 overlap only on c1, voter 3 is alone on
/// c4. The cohesive phase retires {1,2} with just one seat, which costs the
/// pair their whole-group share guarantee.
inline Instance overlap_pair_plus_loner() {
  return make_instance(3, 4, 2, {{1, 2}, {1, 3}, {4}});
}

/// 10 voters, 4 seats: an 8-voter bloc on {c1..c4} and two voters on c5.
inline Instance bloc_with_minority() {
  return make_instance(10, 5, 4,
                       {{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4},
                        {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}, {5}, {5}});
}

/// 2 voters, 4 seats: a small overlap instance where giving voter 2 her whole
/// ballot starves voter 1's two-seat claim.
inline Instance two_voter_overlap() {
  return make_instance(2, 5, 4, {{1, 2}, {2, 3, 4, 5}});
}

/// 3 voters, 2 seats, a unanimous pair against a loner.
inline Instance unanimous_pair_plus_loner() {
  return make_instance(3, 4, 2, {{1, 2}, {1, 2}, {3, 4}});
}

/// 3 voters, 2 seats, pairwise-overlapping singles.
inline Instance chained_pair_plus_loner() {
  return make_instance(3, 5, 2, {{1, 2}, {1, 3}, {4, 5}});
}

/// 4 voters, 4 seats: two voters on {c1} alone plus two three-candidate
/// ballots through c1. No share vector can give both large groups their
/// size-capped union bound.
inline Instance capped_union_infeasible() {
  return make_instance(4, 5, 4, {{1}, {1}, {1, 2, 3}, {1, 4, 5}});
}

/// 2 voters, 2 seats: a single-candidate voter against a two-candidate voter;
/// dictator-style lotteries can only give the first voter probability 1/2.
inline Instance dictator_shortfall() {
  return make_instance(2, 3, 2, {{1}, {2, 3}});
}

/// Two unanimous pairs sharing only c1, 2 of 4 seats: the cohesive phase
/// retires everyone with one seat granted and zero budgets, leaving a seat
/// that only the leftover-spread fallback can fund.
inline Instance all_retired_one_seat_short() {
  return make_instance(4, 3, 2, {{1, 2}, {1, 2}, {1, 3}, {1, 3}});
}

inline FractionalCommittee shares_of(const std::vector<std::string>& values) {
  FractionalCommittee shares;
  for (const auto& value : values) shares.shares.push_back(Rational::parse(value));
  return shares;
}

/// 1-based members, as in the files.
inline IntegralCommittee committee_of(const std::vector<int>& one_based) {
  IntegralCommittee committee;
  for (int c : one_based) committee.members.push_back(c - 1);
  std::sort(committee.members.begin(), committee.members.end());
  return committee;
}

inline Rational frac(long num, long den) { return Rational(num, den); }

/// Deterministic random instance for property tests.
inline Instance random_instance(std::uint64_t seed, int max_voters, int max_candidates,
                                int max_committee) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 1);
  GenParams params;
  params.num_voters = 1 + static_cast<int>(rng() % max_voters);
  params.num_candidates = 1 + static_cast<int>(rng() % max_candidates);
  params.committee_size =
      1 + static_cast<int>(rng() % std::min(max_committee, params.num_candidates));
  static const Rational densities[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  params.density = densities[rng() % 3];
  params.seed = seed;
  return generate_instance(params);
}

/// Random valid share vector: m entries in [0,1] with common denominator at
/// most `max_denominator`, summing exactly to k.
inline FractionalCommittee random_shares(std::mt19937_64& rng, int m, int k, long max_denominator) {
  const long den = 1 + static_cast<long>(rng() % max_denominator);
  std::vector<long> units(m, 0);
  for (long placed = 0; placed < static_cast<long>(k) * den; ++placed) {
    int c = static_cast<int>(rng() % m);
    while (units[c] == den) c = (c + 1) % m;
    ++units[c];
  }
  FractionalCommittee shares;
  for (int c = 0; c < m; ++c) shares.shares.push_back(Rational(units[c], den));
  return shares;
}

}  // namespace bwcv::testing
