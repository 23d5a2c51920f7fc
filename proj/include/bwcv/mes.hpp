#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bwcv/types.hpp"

namespace bwcv {

/// Configuration for one equal-shares buying phase. Budgets may be
/// heterogeneous: the committee-completion pipeline re-enters this phase with
/// per-voter budgets and a reduced candidate pool.
struct MesConfig {
  std::vector<Rational> budgets;  ///< initial per-voter budgets, size num_voters, all >= 0
  std::vector<int> pool;          ///< candidates available for purchase, sorted ascending
  int capacity = 0;               ///< maximum number of candidates to buy
};

/// Budgets committee_size/num_voters each, pool = all candidates,
/// capacity = committee_size.
MesConfig default_mes_config(const Instance& instance);

struct MesResult {
  std::vector<int> selected;  ///< bought candidates, sorted ascending
  /// (candidate, price cap) per round, in buying order.
  std::vector<std::pair<int, Rational>> selection_order;
  PaymentLedger ledger;  ///< spend over all rounds; remaining budgets at termination
};

/// Smallest uniform per-voter price cap at which `candidate`'s approvers can
/// jointly cover the unit cost: the minimal x >= 0 with
/// sum over approvers of min(budget, x) == 1. Returns nullopt when the
/// approvers' pooled budgets fall short of 1. Exact: walks prefix sums of the
/// sorted budgets and solves the linear equation on the matching segment.
std::optional<Rational> affordable_price(const Instance& instance, int candidate,
                                         const std::vector<Rational>& budgets);

/// Buying loop: repeatedly selects the pool candidate affordable at the
/// lowest price cap (ties broken toward the lowest candidate index), charges
/// each approver min(budget, cap), and stops when no candidate is affordable
/// or the capacity is reached.
MesResult run_mes(const Instance& instance, const MesConfig& config);

}  // namespace bwcv
