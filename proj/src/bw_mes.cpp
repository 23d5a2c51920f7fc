#include "bwcv/bw_mes.hpp"

#include <algorithm>
#include <set>

#include "bwcv/core.hpp"
#include "bwcv/rounding.hpp"

namespace bwcv {

std::string to_string(CompletionStrategy strategy) {
  switch (strategy) {
    case CompletionStrategy::LexicographicGreedy:
      return "default";
    case CompletionStrategy::MesContinuation:
      return "mes-continuation";
  }
  throw std::logic_error("unknown completion strategy");
}

std::optional<CompletionStrategy> completion_strategy_from_name(const std::string& name) {
  if (name == "default") return CompletionStrategy::LexicographicGreedy;
  if (name == "mes-continuation") return CompletionStrategy::MesContinuation;
  return std::nullopt;
}

namespace {

/// Pool candidates voter i approves, sorted.
std::vector<int> approved_in_pool(const Instance& instance, int voter, const std::set<int>& pool) {
  std::vector<int> result;
  for (int c : instance.ballots[voter]) {
    if (pool.count(c)) result.push_back(c);
  }
  return result;
}

// `amount` by value: callers pass ledger.remaining[voter] itself.
void spend_on(PaymentLedger& ledger, FractionalCommittee& shares, int voter, int candidate,
              Rational amount) {
  ledger.spend[voter][candidate] += amount;
  ledger.remaining[voter] -= amount;
  shares.shares[candidate] += amount;
}

}  // namespace

std::pair<FractionalCommittee, PaymentLedger> complete_fractional(const Instance& instance,
                                                                  const MesResult& mes,
                                                                  const MesConfig& config,
                                                                  int total_seats,
                                                                  CompletionStrategy strategy) {
  const int n = instance.num_voters;
  const std::set<int> pool(config.pool.begin(), config.pool.end());
  const std::set<int> bought(mes.selected.begin(), mes.selected.end());

  FractionalCommittee shares;
  shares.shares.assign(instance.num_candidates, Rational(0));
  for (int c : mes.selected) shares.shares[c] = Rational(1);
  PaymentLedger ledger = mes.ledger;

  // Voters who still approve an unselected pool candidate must spend their
  // leftovers on approved candidates only; everyone else may fund any pool
  // candidate with spare share capacity.
  std::vector<int> approved_spenders;
  std::vector<int> free_spenders;
  for (int i = 0; i < n; ++i) {
    bool has_open_approved = false;
    for (int c : approved_in_pool(instance, i, pool)) {
      if (!bought.count(c)) {
        has_open_approved = true;
        break;
      }
    }
    (has_open_approved ? approved_spenders : free_spenders).push_back(i);
  }
  const std::set<int> stage_one(approved_spenders.begin(), approved_spenders.end());

  // Stage 1. Every target candidate is unaffordable at termination of the
  // buying phase, so the budgets it absorbs here total strictly below 1 and
  // no share cap is needed.
  if (strategy == CompletionStrategy::LexicographicGreedy) {
    for (int c : config.pool) {
      if (bought.count(c)) continue;
      for (int voter : approvers(instance, c)) {
        if (!stage_one.count(voter) || ledger.remaining[voter].is_zero()) continue;
        spend_on(ledger, shares, voter, c, ledger.remaining[voter]);
      }
    }
  } else {
    std::set<int> open;
    for (int c : config.pool) {
      if (!bought.count(c)) open.insert(c);
    }
    while (true) {
      int best = -1;
      Rational best_pool_budget;
      for (int c : open) {
        Rational collective;
        for (int voter : approvers(instance, c)) {
          if (stage_one.count(voter)) collective += ledger.remaining[voter];
        }
        if (collective > best_pool_budget) {
          best = c;
          best_pool_budget = collective;
        }
      }
      if (best == -1) break;
      for (int voter : approvers(instance, best)) {
        if (!stage_one.count(voter) || ledger.remaining[voter].is_zero()) continue;
        spend_on(ledger, shares, voter, best, ledger.remaining[voter]);
      }
      open.erase(best);
    }
  }

  // Stage 2: fully-represented voters top up unsaturated pool candidates in
  // ascending index order.
  for (int voter : free_spenders) {
    for (int c : config.pool) {
      if (ledger.remaining[voter].is_zero()) break;
      const Rational capacity = Rational(1) - shares.shares[c];
      if (capacity.is_zero()) continue;
      spend_on(ledger, shares, voter, c, min(capacity, ledger.remaining[voter]));
    }
    if (!ledger.remaining[voter].is_zero()) {
      throw std::logic_error("complete_fractional: infeasible completion, voter " +
                             std::to_string(voter + 1) + " has budget " +
                             ledger.remaining[voter].str() + " left");
    }
  }
  for (int voter : approved_spenders) {
    if (!ledger.remaining[voter].is_zero()) {
      throw std::logic_error("complete_fractional: stage-1 voter " + std::to_string(voter + 1) +
                             " has budget left");
    }
  }

  require_fractional(shares, Rational(total_seats));
  return {std::move(shares), std::move(ledger)};
}

BwMesOutput run_bw_mes(const Instance& instance, const BwMesOptions& options) {
  MesConfig config = default_mes_config(instance);
  const bool defaults = !options.budgets && !options.pool && !options.size;
  if (options.budgets) config.budgets = *options.budgets;
  if (options.pool) {
    config.pool = *options.pool;
    std::sort(config.pool.begin(), config.pool.end());
    config.pool.erase(std::unique(config.pool.begin(), config.pool.end()), config.pool.end());
  }
  const int seats = options.size.value_or(instance.committee_size);
  config.capacity = seats;

  if (seats < 1) throw std::invalid_argument("run_bw_mes: needs at least one seat");
  if (seats > static_cast<int>(config.pool.size())) {
    throw std::invalid_argument("run_bw_mes: more seats than pool candidates");
  }
  Rational budget_total;
  for (const auto& b : config.budgets) budget_total += b;
  if (budget_total != Rational(seats)) {
    throw std::invalid_argument("run_bw_mes: budgets sum to " + budget_total.str() +
                                ", expected " + std::to_string(seats));
  }

  BwMesOutput output;
  MesResult mes = run_mes(instance, config);
  output.selected = mes.selected;
  std::tie(output.shares, output.ledger) =
      complete_fractional(instance, mes, config, seats, options.completion);

  // Bookkeeping identities: shares equal column sums of the ledger, bought
  // candidates are fully selected.
  for (int c = 0; c < instance.num_candidates; ++c) {
    Rational column;
    for (int i = 0; i < instance.num_voters; ++i) column += output.ledger.spend[i][c];
    if (column != output.shares.shares[c]) {
      throw std::logic_error("run_bw_mes: ledger column mismatch for candidate " +
                             std::to_string(c + 1));
    }
  }
  for (int c : output.selected) {
    if (output.shares.shares[c] != Rational(1)) {
      throw std::logic_error("run_bw_mes: bought candidate without full share");
    }
  }

  // With the standard configuration every voter spends her whole budget on
  // approved candidates unless they are all fully selected, which caps her
  // spend from below at min(seats, ballot size)/num_voters.
  if (defaults) {
    for (int i = 0; i < instance.num_voters; ++i) {
      Rational on_approved;
      for (int c : instance.ballots[i]) on_approved += output.ledger.spend[i][c];
      const int ballot_size = static_cast<int>(instance.ballots[i].size());
      const Rational bound(std::min(seats, ballot_size), instance.num_voters);
      if (on_approved < bound) {
        throw std::logic_error("run_bw_mes: voter " + std::to_string(i + 1) +
                               " spent " + on_approved.str() + " on approved candidates, below " +
                               bound.str());
      }
    }
  }

  output.lottery = decompose(output.shares);
  require_randomized(output.lottery, seats);
  if (marginals(output.lottery, instance.num_candidates) != output.shares) {
    throw std::logic_error("run_bw_mes: lottery marginals drifted from shares");
  }
  return output;
}

}  // namespace bwcv
