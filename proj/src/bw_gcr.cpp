#include "bwcv/bw_gcr.hpp"

#include <algorithm>

#include "bwcv/core.hpp"

namespace bwcv {

std::vector<Rational> assign_budgets(const Instance& instance, const GcrTrace& trace) {
  const int n = instance.num_voters;
  const int k = instance.committee_size;
  const int residual_seats = k - static_cast<int>(trace.committee.size());
  const Rational fair_share(k, n);

  std::vector<Rational> budgets(n, Rational(0));
  for (const auto& step : trace.steps) {
    bool any_positive = false;
    for (const auto& group : unanimous_partition(step.voters, instance)) {
      const Rational base =
          max(Rational(0), fair_share - Rational(step.depth, static_cast<long>(group.size())));
      // A group gets nothing exactly when its granted depth already covers
      // its proportional share; both directions must hold.
      const bool covered =
          static_cast<long long>(step.depth) * n >= static_cast<long long>(group.size()) * k;
      if (base.is_zero() != covered) {
        throw std::logic_error("assign_budgets: zero-budget criterion violated");
      }
      if (!base.is_zero()) any_positive = true;
      for (int voter : group) budgets[voter] = base;
    }
    if (any_positive && step.depth != static_cast<int>(step.candidates.size())) {
      throw std::logic_error("assign_budgets: positive budget in a step granting more seats than depth");
    }
  }

  Rational granted;
  for (const auto& b : budgets) granted += b;
  const Rational residual = Rational(residual_seats) - granted;
  if (residual < Rational(0)) {
    throw std::logic_error("assign_budgets: negative residual " + residual.str());
  }

  std::vector<int> active;
  for (int i = 0; i < n; ++i) {
    if (!std::binary_search(trace.covered_voters.begin(), trace.covered_voters.end(), i)) {
      active.push_back(i);
    }
  }
  if (!active.empty()) {
    const Rational each = residual / Rational(static_cast<long>(active.size()));
    if (each < fair_share) {
      throw std::logic_error("assign_budgets: active voter budget " + each.str() +
                             " below fair share " + fair_share.str());
    }
    for (int voter : active) budgets[voter] = each;
  } else if (!residual.is_zero()) {
    // Every voter is retired but seats remain unfunded; split the leftover
    // equally so the completion phase can still fill the committee.
    const Rational each = residual / Rational(n);
    for (int i = 0; i < n; ++i) budgets[i] += each;
  }

  Rational total;
  for (const auto& b : budgets) total += b;
  if (total != Rational(residual_seats)) {
    throw std::logic_error("assign_budgets: budgets sum to " + total.str() + ", expected " +
                           std::to_string(residual_seats));
  }
  return budgets;
}

BwGcrOutput run_bw_gcr(const Instance& instance, CompletionStrategy completion) {
  BwGcrOutput output;
  output.trace = run_gcr(instance);
  output.residual_seats = instance.committee_size - static_cast<int>(output.trace.committee.size());
  output.budgets = assign_budgets(instance, output.trace);

  IntegralCommittee granted{output.trace.committee};

  if (output.residual_seats == 0) {
    output.lottery.entries.push_back({Rational(1), granted});
  } else {
    std::vector<int> pool;
    for (int c = 0; c < instance.num_candidates; ++c) {
      if (!granted.contains(c)) pool.push_back(c);
    }
    BwMesOptions options;
    options.budgets = output.budgets;
    options.pool = pool;
    options.size = output.residual_seats;
    options.completion = completion;
    BwMesOutput completion_output = run_bw_mes(instance, options);

    for (const auto& entry : completion_output.lottery.entries) {
      IntegralCommittee merged = entry.committee;
      merged.members.insert(merged.members.end(), granted.members.begin(), granted.members.end());
      std::sort(merged.members.begin(), merged.members.end());
      output.lottery.entries.push_back({entry.probability, std::move(merged)});
    }
    output.lottery = normalized(std::move(output.lottery));
  }

  require_randomized(output.lottery, instance.committee_size);
  for (const auto& entry : output.lottery.entries) {
    if (!is_subset(granted.members, entry.committee.members)) {
      throw std::logic_error("run_bw_gcr: support committee missing a granted candidate");
    }
  }
  output.shares = marginals(output.lottery, instance.num_candidates);
  require_fractional(output.shares, Rational(instance.committee_size));
  return output;
}

}  // namespace bwcv
