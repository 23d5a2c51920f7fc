#include "bwcv/mes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bwcv/core.hpp"

namespace bwcv {

MesConfig default_mes_config(const Instance& instance) {
  MesConfig config;
  config.budgets.assign(instance.num_voters,
                        Rational(instance.committee_size, instance.num_voters));
  config.pool.resize(instance.num_candidates);
  std::iota(config.pool.begin(), config.pool.end(), 0);
  config.capacity = instance.committee_size;
  return config;
}

std::optional<Rational> affordable_price(const Instance& instance, int candidate,
                                         const std::vector<Rational>& budgets) {
  std::vector<Rational> sorted;
  for (int voter : approvers(instance, candidate)) sorted.push_back(budgets.at(voter));
  std::sort(sorted.begin(), sorted.end());

  Rational pooled;
  for (const auto& b : sorted) pooled += b;
  if (pooled < Rational(1)) return std::nullopt;

  // Below the j-th sorted budget, the charge function is
  //   prefix(j) + (t - j) * x
  // (the j poorest approvers pay their whole budget, the rest pay x).
  // Scan segments in ascending order; the first segment whose linear
  // solution lies inside it gives the minimal cap.
  const int t = static_cast<int>(sorted.size());
  Rational prefix;
  for (int j = 0; j < t; ++j) {
    const Rational cap = (Rational(1) - prefix) / Rational(t - j);
    const Rational lower = (j == 0) ? Rational(0) : sorted[j - 1];
    if (cap >= lower && cap <= sorted[j]) return cap;
    prefix += sorted[j];
  }
  // pooled >= 1 guarantees some segment matched unless rounding logic is broken.
  throw std::logic_error("affordable_price: no segment matched");
}

MesResult run_mes(const Instance& instance, const MesConfig& config) {
  const int n = instance.num_voters;
  const int m = instance.num_candidates;
  if (static_cast<int>(config.budgets.size()) != n) {
    throw std::invalid_argument("run_mes: budgets size mismatch");
  }
  for (const auto& b : config.budgets) {
    if (b < Rational(0)) throw std::invalid_argument("run_mes: negative budget");
  }
  for (int c : config.pool) {
    if (c < 0 || c >= m) throw std::invalid_argument("run_mes: pool candidate out of range");
  }
  if (config.capacity < 0) throw std::invalid_argument("run_mes: negative capacity");

  MesResult result;
  result.ledger.spend.assign(n, std::vector<Rational>(m, Rational(0)));
  result.ledger.remaining = config.budgets;

  std::set<int> open(config.pool.begin(), config.pool.end());
  while (static_cast<int>(result.selected.size()) < config.capacity) {
    int best_candidate = -1;
    Rational best_price;
    for (int candidate : open) {
      auto price = affordable_price(instance, candidate, result.ledger.remaining);
      if (!price) continue;
      if (best_candidate == -1 || *price < best_price) {
        best_candidate = candidate;
        best_price = *price;
      }
    }
    if (best_candidate == -1) break;

    for (int voter : approvers(instance, best_candidate)) {
      const Rational payment = min(result.ledger.remaining[voter], best_price);
      result.ledger.spend[voter][best_candidate] += payment;
      result.ledger.remaining[voter] -= payment;
    }
    result.selected.push_back(best_candidate);
    result.selection_order.emplace_back(best_candidate, best_price);
    open.erase(best_candidate);
  }

  std::sort(result.selected.begin(), result.selected.end());
  return result;
}

}  // namespace bwcv
