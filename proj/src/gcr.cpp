#include "bwcv/gcr.hpp"

#include <algorithm>
#include <numeric>

#include "bwcv/core.hpp"

namespace bwcv {

namespace {

/// Visits all size-t index combinations of `items` (sorted) in lexicographic
/// order. `visit` returns true to stop early.
template <typename Visit>
void for_each_combination(const std::vector<int>& items, int t, Visit visit) {
  const int n = static_cast<int>(items.size());
  if (t > n || t <= 0) return;
  std::vector<int> idx(t);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> subset(t);
  while (true) {
    for (int j = 0; j < t; ++j) subset[j] = items[idx[j]];
    if (visit(subset)) return;
    int j = t - 1;
    while (j >= 0 && idx[j] == n - t + j) --j;
    if (j < 0) return;
    ++idx[j];
    for (int l = j + 1; l < t; ++l) idx[l] = idx[l - 1] + 1;
  }
}

}  // namespace

std::optional<CohesiveGroup> find_best_cohesive_group(const Instance& instance,
                                                      const std::vector<int>& active,
                                                      const std::vector<int>& available) {
  const int n = instance.num_voters;
  const int k = instance.committee_size;

  int depth_max = 0;
  for (int voter : active) {
    depth_max = std::max(depth_max, intersection_size(instance.ballots[voter], available));
  }
  depth_max = std::min(depth_max, k);

  for (int depth = depth_max; depth >= 1; --depth) {
    for (int t = depth; t <= std::min(k, static_cast<int>(available.size())); ++t) {
      std::optional<CohesiveGroup> best;
      for_each_combination(available, t, [&](const std::vector<int>& subset) {
        std::vector<int> supporters;
        for (int voter : active) {
          if (intersection_size(instance.ballots[voter], subset) >= depth) {
            supporters.push_back(voter);
          }
        }
        // Deserves t seats iff |supporters| >= t * n / k, compared exactly.
        if (static_cast<long long>(supporters.size()) * k < static_cast<long long>(t) * n) {
          return false;
        }
        if (!best || supporters.size() > best->voters.size()) {
          best = CohesiveGroup{depth, subset, std::move(supporters)};
        }
        return false;  // keep scanning: a later set may cover more voters
      });
      if (best) return best;
    }
  }
  return std::nullopt;
}

GcrTrace run_gcr(const Instance& instance) {
  GcrTrace trace;
  std::vector<int> active(instance.num_voters);
  std::iota(active.begin(), active.end(), 0);
  std::vector<int> available(instance.num_candidates);
  std::iota(available.begin(), available.end(), 0);

  while (true) {
    auto step = find_best_cohesive_group(instance, active, available);
    if (!step) break;

    for (int c : step->candidates) {
      available.erase(std::remove(available.begin(), available.end(), c), available.end());
      trace.committee.push_back(c);
    }
    std::vector<int> still_active;
    for (int voter : active) {
      if (std::binary_search(step->voters.begin(), step->voters.end(), voter)) {
        trace.covered_voters.push_back(voter);
      } else {
        still_active.push_back(voter);
      }
    }
    active = std::move(still_active);
    trace.steps.push_back(std::move(*step));
  }

  std::sort(trace.committee.begin(), trace.committee.end());
  std::sort(trace.covered_voters.begin(), trace.covered_voters.end());
  if (static_cast<int>(trace.committee.size()) > instance.committee_size) {
    throw std::logic_error("run_gcr: committee exceeds seat count");
  }
  return trace;
}

}  // namespace bwcv
