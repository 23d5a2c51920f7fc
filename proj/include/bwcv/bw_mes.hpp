#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bwcv/mes.hpp"
#include "bwcv/types.hpp"

namespace bwcv {

/// How leftover budgets of voters with unselected approved candidates are
/// turned into fractional shares (the completion step is a rule family; any
/// member that spends those budgets on approved candidates keeps the
/// fairness guarantees).
enum class CompletionStrategy {
  /// Walk candidates in ascending index; each unselected candidate absorbs
  /// the full remaining budgets of its approvers.
  LexicographicGreedy,
  /// Repeatedly fund the unselected candidate whose approvers hold the most
  /// leftover budget, absorbing those budgets, until none remain.
  MesContinuation,
};

std::string to_string(CompletionStrategy strategy);
std::optional<CompletionStrategy> completion_strategy_from_name(const std::string& name);

struct BwMesOptions {
  std::optional<std::vector<Rational>> budgets;  ///< default: committee_size/num_voters each
  std::optional<std::vector<int>> pool;          ///< default: all candidates
  std::optional<int> size;                       ///< default: committee_size
  CompletionStrategy completion = CompletionStrategy::LexicographicGreedy;
};

struct BwMesOutput {
  FractionalCommittee shares;
  RandomizedCommittee lottery;
  PaymentLedger ledger;
  std::vector<int> selected;  ///< candidates bought outright in the buying phase
};

/// Extends a buying-phase result to a full fractional committee of size
/// `total_seats` by spending leftover budgets, in two stages: voters who still
/// approve an unselected pool candidate spend on approved candidates per the
/// strategy; the rest spend anywhere in the pool, capped at share 1.
/// Returns the shares together with the extended ledger (remaining budgets
/// all zero).
std::pair<FractionalCommittee, PaymentLedger> complete_fractional(const Instance& instance,
                                                                  const MesResult& mes,
                                                                  const MesConfig& config,
                                                                  int total_seats,
                                                                  CompletionStrategy strategy);

/// Full pipeline: buying phase, completion, systematic rounding. With default
/// options the lottery's committees all contain the bought set and the shares
/// give every group of voters its proportional expected representation (see
/// the axioms module for the checkable statements).
BwMesOutput run_bw_mes(const Instance& instance, const BwMesOptions& options = {});

}  // namespace bwcv
