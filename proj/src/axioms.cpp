#include "bwcv/axioms.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "bwcv/core.hpp"

namespace bwcv {

namespace {

constexpr int kMaskBits = 62;

void require_enumerable(int count, int limit, const char* what) {
  const int effective = std::min(limit, kMaskBits);
  if (count > effective) {
    throw SizeLimitError(std::string("exhaustive check over ") + what + " refused: " +
                         std::to_string(count) + " > limit " + std::to_string(effective));
  }
}

std::vector<std::uint64_t> ballot_masks(const Instance& instance) {
  std::vector<std::uint64_t> masks(instance.num_voters, 0);
  for (int i = 0; i < instance.num_voters; ++i) {
    for (int c : instance.ballots[i]) masks[i] |= std::uint64_t{1} << c;
  }
  return masks;
}

std::uint64_t committee_mask(const IntegralCommittee& committee) {
  std::uint64_t mask = 0;
  for (int c : committee.members) mask |= std::uint64_t{1} << c;
  return mask;
}

std::vector<int> bits_of(std::uint64_t mask) {
  std::vector<int> result;
  while (mask != 0) {
    const int bit = std::countr_zero(mask);
    result.push_back(bit);
    mask &= mask - 1;
  }
  return result;
}

std::vector<int> approved_in_committee(const Instance& instance,
                                       const IntegralCommittee& committee) {
  std::vector<int> served(instance.num_voters, 0);
  for (int i = 0; i < instance.num_voters; ++i) {
    served[i] = intersection_size(instance.ballots[i], committee.members);
  }
  return served;
}

void require_share_vector(const Instance& instance, const FractionalCommittee& shares) {
  if (static_cast<int>(shares.shares.size()) != instance.num_candidates) {
    throw std::invalid_argument("share vector size does not match candidate count");
  }
}

Witness group_witness(std::vector<int> voters, std::vector<int> candidates, int level,
                      Rational achieved, Rational required) {
  Witness w;
  w.voters = std::move(voters);
  w.candidates = std::move(candidates);
  w.level = level;
  w.achieved = std::move(achieved);
  w.required = std::move(required);
  return w;
}

}  // namespace

Verdict check_jr(const Instance& instance, const IntegralCommittee& committee) {
  const auto served = approved_in_committee(instance, committee);
  const long long n = instance.num_voters;
  const long long k = instance.committee_size;
  for (int c = 0; c < instance.num_candidates; ++c) {
    if (committee.contains(c)) continue;
    std::vector<int> unserved_fans;
    for (int i = 0; i < instance.num_voters; ++i) {
      if (served[i] == 0 &&
          std::binary_search(instance.ballots[i].begin(), instance.ballots[i].end(), c)) {
        unserved_fans.push_back(i);
      }
    }
    if (static_cast<long long>(unserved_fans.size()) * k >= n) {
      return {false, group_witness(std::move(unserved_fans), {c}, 1, Rational(0), Rational(1))};
    }
  }
  return {true, std::nullopt};
}

Verdict check_pjr(const Instance& instance, const IntegralCommittee& committee,
                  const SizeLimits& limits) {
  const int n = instance.num_voters;
  const long long k = instance.committee_size;
  require_enumerable(n, limits.max_enumerable_voters, "voter subsets");

  const auto masks = ballot_masks(instance);
  const std::uint64_t selected = committee_mask(committee);
  const std::uint64_t all = std::uint64_t{1} << n;

  std::vector<std::uint64_t> common(all, 0);
  std::vector<std::uint64_t> joint(all, 0);
  for (std::uint64_t group = 1; group < all; ++group) {
    const int low = std::countr_zero(group);
    const std::uint64_t rest = group & (group - 1);
    common[group] = rest == 0 ? masks[low] : (common[rest] & masks[low]);
    joint[group] = rest == 0 ? masks[low] : (joint[rest] | masks[low]);

    const long long size = std::popcount(group);
    const long long level = std::min<long long>(
        {k, std::popcount(common[group]), size * k / static_cast<long long>(n)});
    if (level < 1) continue;
    const int covered = std::popcount(joint[group] & selected);
    if (covered < level) {
      return {false, group_witness(bits_of(group), bits_of(common[group]),
                                   static_cast<int>(level), Rational(covered),
                                   Rational(static_cast<long>(level)))};
    }
  }
  return {true, std::nullopt};
}

Verdict check_ejr(const Instance& instance, const IntegralCommittee& committee,
                  const SizeLimits& limits) {
  const int m = instance.num_candidates;
  const long long n = instance.num_voters;
  const long long k = instance.committee_size;
  require_enumerable(m, limits.max_enumerable_candidates, "candidate subsets");

  const auto masks = ballot_masks(instance);
  const auto served = approved_in_committee(instance, committee);
  const std::uint64_t all = std::uint64_t{1} << m;
  for (std::uint64_t group = 1; group < all; ++group) {
    const int level = std::popcount(group);
    if (level > instance.committee_size) continue;
    std::vector<int> starved;
    int best_served = 0;
    for (int i = 0; i < instance.num_voters; ++i) {
      if ((masks[i] & group) == group && served[i] < level) {
        starved.push_back(i);
        best_served = std::max(best_served, served[i]);
      }
    }
    if (static_cast<long long>(starved.size()) * k >= static_cast<long long>(level) * n) {
      return {false, group_witness(std::move(starved), bits_of(group), level,
                                   Rational(best_served), Rational(level))};
    }
  }
  return {true, std::nullopt};
}

Verdict check_ejr_plus(const Instance& instance, const IntegralCommittee& committee) {
  const long long n = instance.num_voters;
  const long long k = instance.committee_size;
  const auto served = approved_in_committee(instance, committee);
  for (int c = 0; c < instance.num_candidates; ++c) {
    if (committee.contains(c)) continue;
    const auto fans = approvers(instance, c);
    for (int level = 1; level <= instance.committee_size; ++level) {
      std::vector<int> starved;
      int best_served = 0;
      for (int i : fans) {
        if (served[i] < level) {
          starved.push_back(i);
          best_served = std::max(best_served, served[i]);
        }
      }
      if (static_cast<long long>(starved.size()) * k >= static_cast<long long>(level) * n) {
        return {false, group_witness(std::move(starved), {c}, level, Rational(best_served),
                                     Rational(level))};
      }
    }
  }
  return {true, std::nullopt};
}

Verdict check_fjr(const Instance& instance, const IntegralCommittee& committee,
                  const SizeLimits& limits) {
  const int m = instance.num_candidates;
  const long long n = instance.num_voters;
  const long long k = instance.committee_size;
  require_enumerable(m, limits.max_enumerable_candidates, "candidate subsets");

  const auto masks = ballot_masks(instance);
  const auto served = approved_in_committee(instance, committee);
  const std::uint64_t all = std::uint64_t{1} << m;
  for (std::uint64_t group = 1; group < all; ++group) {
    const int t = std::popcount(group);
    if (t > instance.committee_size) continue;
    for (int depth = 1; depth <= t; ++depth) {
      std::vector<int> starved;
      int best_served = 0;
      for (int i = 0; i < instance.num_voters; ++i) {
        if (std::popcount(masks[i] & group) >= depth && served[i] < depth) {
          starved.push_back(i);
          best_served = std::max(best_served, served[i]);
        }
      }
      if (static_cast<long long>(starved.size()) * k >= static_cast<long long>(t) * n) {
        return {false, group_witness(std::move(starved), bits_of(group), depth,
                                     Rational(best_served), Rational(depth))};
      }
    }
  }
  return {true, std::nullopt};
}

Verdict check_positive_share(const Instance& instance, const FractionalCommittee& shares) {
  require_share_vector(instance, shares);
  for (int i = 0; i < instance.num_voters; ++i) {
    const Rational u = utility(instance, i, shares);
    if (!(u > Rational(0))) {
      return {false, group_witness({i}, instance.ballots[i], 0, u, Rational(0))};
    }
  }
  return {true, std::nullopt};
}

Verdict check_ifs(const Instance& instance, const FractionalCommittee& shares) {
  require_share_vector(instance, shares);
  for (int i = 0; i < instance.num_voters; ++i) {
    const Rational u = utility(instance, i, shares);
    const Rational bound(
        std::min<long>(instance.committee_size, static_cast<long>(instance.ballots[i].size())),
        instance.num_voters);
    if (u < bound) return {false, group_witness({i}, instance.ballots[i], 0, u, bound)};
  }
  return {true, std::nullopt};
}

Verdict check_strong_ifs(const Instance& instance, const FractionalCommittee& shares) {
  require_share_vector(instance, shares);
  for (int i = 0; i < instance.num_voters; ++i) {
    const Rational u = utility(instance, i, shares);
    const Rational bound = min(Rational(instance.committee_size, instance.num_voters),
                               Rational(static_cast<long>(instance.ballots[i].size())));
    if (u < bound) return {false, group_witness({i}, instance.ballots[i], 0, u, bound)};
  }
  return {true, std::nullopt};
}

namespace {

std::vector<std::vector<int>> all_unanimous_groups(const Instance& instance) {
  std::vector<int> everyone(instance.num_voters);
  for (int i = 0; i < instance.num_voters; ++i) everyone[i] = i;
  return unanimous_partition(everyone, instance);
}

}  // namespace

Verdict check_ufs(const Instance& instance, const FractionalCommittee& shares) {
  require_share_vector(instance, shares);
  for (const auto& group : all_unanimous_groups(instance)) {
    const int leader = group.front();
    const Rational u = utility(instance, leader, shares);
    const Rational bound =
        Rational(static_cast<long>(group.size()), instance.num_voters) *
        Rational(std::min<long>(instance.committee_size,
                                static_cast<long>(instance.ballots[leader].size())));
    if (u < bound) return {false, group_witness(group, instance.ballots[leader], 0, u, bound)};
  }
  return {true, std::nullopt};
}

Verdict check_strong_ufs(const Instance& instance, const FractionalCommittee& shares) {
  require_share_vector(instance, shares);
  for (const auto& group : all_unanimous_groups(instance)) {
    const int leader = group.front();
    const Rational u = utility(instance, leader, shares);
    const Rational bound =
        min(Rational(static_cast<long>(group.size()) * instance.committee_size,
                     instance.num_voters),
            Rational(static_cast<long>(instance.ballots[leader].size())));
    if (u < bound) return {false, group_witness(group, instance.ballots[leader], 0, u, bound)};
  }
  return {true, std::nullopt};
}

namespace {

/// Shared walk for the two whole-group checks: for every voter subset,
/// compare the shares over the union of its ballots with a bound computed
/// from the subset. Union sums are memoized per distinct union.
template <typename Bound>
Verdict check_over_groups(const Instance& instance, const FractionalCommittee& shares,
                          const SizeLimits& limits, Bound bound_of) {
  const int n = instance.num_voters;
  require_enumerable(n, limits.max_enumerable_voters, "voter subsets");
  const auto masks = ballot_masks(instance);

  std::vector<std::uint64_t> joint(std::uint64_t{1} << n, 0);
  std::map<std::uint64_t, Rational> union_total;
  for (std::uint64_t group = 1; group < (std::uint64_t{1} << n); ++group) {
    const int low = std::countr_zero(group);
    const std::uint64_t rest = group & (group - 1);
    joint[group] = rest == 0 ? masks[low] : (joint[rest] | masks[low]);

    auto [it, fresh] = union_total.try_emplace(joint[group]);
    if (fresh) {
      Rational total;
      for (int c : bits_of(joint[group])) total += shares.shares[c];
      it->second = std::move(total);
    }
    const Rational& achieved = it->second;
    const Rational required = bound_of(group, joint[group]);
    if (achieved < required) {
      return {false,
              group_witness(bits_of(group), bits_of(joint[group]), 0, achieved, required)};
    }
  }
  return {true, std::nullopt};
}

}  // namespace

Verdict check_gfs(const Instance& instance, const FractionalCommittee& shares,
                  const SizeLimits& limits) {
  require_share_vector(instance, shares);
  std::vector<long> entitlement(instance.num_voters);
  for (int i = 0; i < instance.num_voters; ++i) {
    entitlement[i] = std::min<long>(instance.committee_size,
                                    static_cast<long>(instance.ballots[i].size()));
  }
  return check_over_groups(instance, shares, limits,
                           [&](std::uint64_t group, std::uint64_t) {
                             long total = 0;
                             for (int i : bits_of(group)) total += entitlement[i];
                             return Rational(total, instance.num_voters);
                           });
}

Verdict check_strong_gfs(const Instance& instance, const FractionalCommittee& shares,
                         const SizeLimits& limits) {
  require_share_vector(instance, shares);
  return check_over_groups(
      instance, shares, limits, [&](std::uint64_t group, std::uint64_t joint) {
        const Rational proportional(
            static_cast<long>(std::popcount(group)) * instance.committee_size,
            instance.num_voters);
        return min(proportional, Rational(std::popcount(joint)));
      });
}

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> axioms = {
      Axiom::Fjr,       Axiom::Ejr,        Axiom::EjrPlus, Axiom::Pjr,       Axiom::Jr,
      Axiom::Gfs,       Axiom::StrongGfs,  Axiom::Ufs,     Axiom::StrongUfs, Axiom::Ifs,
      Axiom::StrongIfs, Axiom::PositiveShare};
  return axioms;
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Jr: return "jr";
    case Axiom::Pjr: return "pjr";
    case Axiom::Ejr: return "ejr";
    case Axiom::EjrPlus: return "ejr-plus";
    case Axiom::Fjr: return "fjr";
    case Axiom::PositiveShare: return "positive-share";
    case Axiom::Ifs: return "ifs";
    case Axiom::StrongIfs: return "strong-ifs";
    case Axiom::Ufs: return "ufs";
    case Axiom::StrongUfs: return "strong-ufs";
    case Axiom::Gfs: return "gfs";
    case Axiom::StrongGfs: return "strong-gfs";
  }
  throw std::logic_error("unknown axiom");
}

std::optional<Axiom> axiom_from_name(const std::string& name) {
  for (Axiom axiom : all_axioms()) {
    if (to_string(axiom) == name) return axiom;
  }
  return std::nullopt;
}

bool is_ex_post(Axiom axiom) {
  switch (axiom) {
    case Axiom::Jr:
    case Axiom::Pjr:
    case Axiom::Ejr:
    case Axiom::EjrPlus:
    case Axiom::Fjr:
      return true;
    default:
      return false;
  }
}

Verdict check_committee(Axiom axiom, const Instance& instance, const IntegralCommittee& committee,
                        const SizeLimits& limits) {
  switch (axiom) {
    case Axiom::Jr: return check_jr(instance, committee);
    case Axiom::Pjr: return check_pjr(instance, committee, limits);
    case Axiom::Ejr: return check_ejr(instance, committee, limits);
    case Axiom::EjrPlus: return check_ejr_plus(instance, committee);
    case Axiom::Fjr: return check_fjr(instance, committee, limits);
    default:
      throw std::invalid_argument("axiom '" + to_string(axiom) + "' applies to fractional committees");
  }
}

Verdict check_shares(Axiom axiom, const Instance& instance, const FractionalCommittee& shares,
                     const SizeLimits& limits) {
  switch (axiom) {
    case Axiom::PositiveShare: return check_positive_share(instance, shares);
    case Axiom::Ifs: return check_ifs(instance, shares);
    case Axiom::StrongIfs: return check_strong_ifs(instance, shares);
    case Axiom::Ufs: return check_ufs(instance, shares);
    case Axiom::StrongUfs: return check_strong_ufs(instance, shares);
    case Axiom::Gfs: return check_gfs(instance, shares, limits);
    case Axiom::StrongGfs: return check_strong_gfs(instance, shares, limits);
    default:
      throw std::invalid_argument("axiom '" + to_string(axiom) + "' applies to integral committees");
  }
}

Verdict check_lottery(Axiom axiom, const Instance& instance, const RandomizedCommittee& lottery,
                      const SizeLimits& limits) {
  if (!is_ex_post(axiom)) {
    throw std::invalid_argument("check_lottery needs an ex-post axiom");
  }
  for (const auto& entry : lottery.entries) {
    Verdict verdict = check_committee(axiom, instance, entry.committee, limits);
    if (!verdict.satisfied) return verdict;
  }
  return {true, std::nullopt};
}

}  // namespace bwcv
