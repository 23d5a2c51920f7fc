// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit on any
// failure. Everything is checked with exact rational arithmetic; the timed
// criteria also enforce their wall-clock budgets.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <string>
#include <vector>

#include "bwcv/axioms.hpp"
#include "bwcv/bw_gcr.hpp"
#include "bwcv/bw_mes.hpp"
#include "bwcv/core.hpp"
#include "bwcv/gcr.hpp"
#include "bwcv/harness.hpp"
#include "bwcv/mes.hpp"
#include "bwcv/rounding.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bwcv;
using namespace bwcv::testing;

namespace {

struct Criterion {
  int id;
  std::string label;
  bool passed = true;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 = untimed
};

class Runner {
 public:
  Criterion* begin(int id, std::string label, double budget_seconds = 0.0) {
    criteria_.push_back({id, std::move(label), true, "", 0.0, budget_seconds});
    started_ = std::chrono::steady_clock::now();
    return &criteria_.back();
  }

  void finish(Criterion* criterion) {
    criterion->seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
    if (criterion->budget_seconds > 0 && criterion->seconds > criterion->budget_seconds) {
      fail(criterion, "exceeded time budget of " + std::to_string(criterion->budget_seconds) +
                          "s");
    }
  }

  static void fail(Criterion* criterion, const std::string& why) {
    criterion->passed = false;
    if (!criterion->detail.empty()) criterion->detail += "; ";
    criterion->detail += why;
  }

  static void expect(Criterion* criterion, bool ok, const std::string& why) {
    if (!ok) fail(criterion, why);
  }

  int report() {
    std::stable_sort(criteria_.begin(), criteria_.end(),
                     [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
    int failures = 0;
    for (const auto& criterion : criteria_) {
      std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", criterion.passed ? "PASS" : "FAIL",
                  criterion.id, criterion.label.c_str(), criterion.seconds,
                  criterion.detail.empty() ? "" : " - ", criterion.detail.c_str());
      if (!criterion.passed) ++failures;
    }
    return failures;
  }

 private:
  std::deque<Criterion> criteria_;  // stable addresses: criteria hold cross-references
  std::chrono::steady_clock::time_point started_;
};

std::string at_seed(std::uint64_t seed) { return " (seed " + std::to_string(seed) + ")"; }

// Shared bookkeeping between criteria 2/4 (the property suites), 3 (ledger
// and budget inspection) and 7 (hierarchy consistency).
struct CrossChecks {
  Criterion* spend_bounds = nullptr;
  Criterion* hierarchy = nullptr;
  long spend_checks = 0;
  long hierarchy_outcomes = 0;
};

void check_hierarchy(CrossChecks& cross, const Instance& instance,
                     const FractionalCommittee& shares, const RandomizedCommittee& lottery,
                     std::uint64_t seed) {
  const SizeLimits limits;
  const bool fjr = check_lottery(Axiom::Fjr, instance, lottery, limits).satisfied;
  const bool ejr = check_lottery(Axiom::Ejr, instance, lottery, limits).satisfied;
  const bool pjr = check_lottery(Axiom::Pjr, instance, lottery, limits).satisfied;
  const bool jr = check_lottery(Axiom::Jr, instance, lottery, limits).satisfied;
  const bool gfs = check_gfs(instance, shares, limits).satisfied;
  const bool ufs = check_ufs(instance, shares).satisfied;
  const bool ifs = check_ifs(instance, shares).satisfied;
  const bool strong_ufs = check_strong_ufs(instance, shares).satisfied;
  const bool strong_ifs = check_strong_ifs(instance, shares).satisfied;

  auto implies = [&](bool a, bool b, const char* what) {
    if (a && !b) Runner::fail(cross.hierarchy, std::string(what) + at_seed(seed));
  };
  implies(fjr, ejr, "fjr without ejr");
  implies(ejr, pjr, "ejr without pjr");
  implies(pjr, jr, "pjr without jr");
  implies(gfs, ufs, "gfs without ufs");
  implies(ufs, ifs, "ufs without ifs");
  implies(strong_ufs, strong_ifs, "strong-ufs without strong-ifs");
  implies(strong_ufs, ufs, "strong-ufs without ufs");
  implies(strong_ifs, ifs, "strong-ifs without ifs");
  ++cross.hierarchy_outcomes;
}

void criterion_1_exact_trace(Runner& runner) {
  auto* c = runner.begin(1, "exact two-round trace, shares and lottery on the 8-voter instance",
                         1.0);
  const Instance instance = eight_voter_two_round();
  const MesResult mes = run_mes(instance, default_mes_config(instance));

  Runner::expect(c, mes.selection_order.size() == 2, "expected exactly two purchases");
  if (mes.selection_order.size() == 2) {
    Runner::expect(c,
                   mes.selection_order[0] == std::pair<int, Rational>{2, frac(1, 5)} &&
                       mes.selection_order[1] == std::pair<int, Rational>{0, frac(13, 40)},
                   "purchase order or prices differ");
  }
  const std::vector<Rational> remaining{frac(7, 40), frac(7, 40), frac(7, 40), frac(1, 20),
                                        frac(1, 20), Rational(0), Rational(0), frac(3, 8)};
  Runner::expect(c, mes.ledger.remaining == remaining, "remaining budgets differ");

  const BwMesOutput output = run_bw_mes(instance);
  Runner::expect(c, output.shares == shares_of({"1/1", "19/40", "1/1", "21/40"}),
                 "completed shares differ");
  RandomizedCommittee expected;
  expected.entries.push_back({frac(19, 40), committee_of({1, 2, 3})});
  expected.entries.push_back({frac(21, 40), committee_of({1, 3, 4})});
  Runner::expect(c,
                 output.lottery.entries.size() == 2 &&
                     output.lottery.entries[0].probability == expected.entries[0].probability &&
                     output.lottery.entries[0].committee == expected.entries[0].committee &&
                     output.lottery.entries[1].probability == expected.entries[1].probability &&
                     output.lottery.entries[1].committee == expected.entries[1].committee,
                 "lottery differs");
  runner.finish(c);
}

void criterion_2_completion_suite(Runner& runner, CrossChecks& cross) {
  auto* c = runner.begin(2,
                         "1000 random instances: both completions pass gfs, strong-ufs, ejr, "
                         "ejr-plus with exact marginals",
                         120.0);
  const SizeLimits limits;
  for (std::uint64_t seed = 1; seed <= 1000 && c->passed; ++seed) {
    std::mt19937_64 rng(seed);
    GenParams params;
    params.num_voters = 1 + static_cast<int>(rng() % 8);
    params.num_candidates = 1 + static_cast<int>(rng() % 8);
    params.committee_size =
        1 + static_cast<int>(rng() % std::min(params.num_candidates, 5));
    static const Rational densities[] = {frac(1, 4), frac(1, 2), frac(3, 4)};
    params.density = densities[seed % 3];
    params.seed = seed;
    const Instance instance = generate_instance(params);

    for (auto strategy :
         {CompletionStrategy::LexicographicGreedy, CompletionStrategy::MesContinuation}) {
      BwMesOptions options;
      options.completion = strategy;
      BwMesOutput output;
      try {
        output = run_bw_mes(instance, options);
      } catch (const std::exception& e) {
        Runner::fail(c, std::string("run failed: ") + e.what() + at_seed(seed));
        break;
      }

      // marginal and size invariants, exact
      if (marginals(output.lottery, instance.num_candidates) != output.shares) {
        Runner::fail(c, "marginals differ from shares" + at_seed(seed));
      }
      if (output.shares.total() != Rational(instance.committee_size)) {
        Runner::fail(c, "shares do not sum to the seat count" + at_seed(seed));
      }
      for (const auto& entry : output.lottery.entries) {
        if (entry.committee.size() != instance.committee_size) {
          Runner::fail(c, "support committee of wrong size" + at_seed(seed));
        }
      }
      if (!check_gfs(instance, output.shares, limits).satisfied) {
        Runner::fail(c, "gfs violated" + at_seed(seed));
      }
      if (!check_strong_ufs(instance, output.shares).satisfied) {
        Runner::fail(c, "strong-ufs violated" + at_seed(seed));
      }
      if (!check_lottery(Axiom::Ejr, instance, output.lottery, limits).satisfied) {
        Runner::fail(c, "ejr violated" + at_seed(seed));
      }
      if (!check_lottery(Axiom::EjrPlus, instance, output.lottery, limits).satisfied) {
        Runner::fail(c, "ejr-plus violated" + at_seed(seed));
      }

      // criterion 3: ledger inspection, spend on approved candidates covers
      // the entitlement and exhausts the budget
      for (int i = 0; i < instance.num_voters; ++i) {
        Rational approved_spend;
        Rational total_spend;
        for (int cand = 0; cand < instance.num_candidates; ++cand) {
          total_spend += output.ledger.spend[i][cand];
        }
        for (int cand : instance.ballots[i]) approved_spend += output.ledger.spend[i][cand];
        const Rational entitlement(
            std::min<long>(instance.committee_size,
                           static_cast<long>(instance.ballots[i].size())),
            instance.num_voters);
        if (approved_spend < entitlement) {
          Runner::fail(cross.spend_bounds, "approved spend below entitlement" + at_seed(seed));
        }
        if (total_spend != Rational(instance.committee_size, instance.num_voters)) {
          Runner::fail(cross.spend_bounds, "budget not exhausted" + at_seed(seed));
        }
        cross.spend_checks += 2;
      }

      check_hierarchy(cross, instance, output.shares, output.lottery, seed);
    }
  }
  runner.finish(c);
}

void criterion_4_cohesive_suite(Runner& runner, CrossChecks& cross) {
  auto* c = runner.begin(4,
                         "500 random instances: cohesive pipeline passes strong-ufs and fjr, "
                         "supports contain the granted set",
                         300.0);
  const SizeLimits limits;
  for (std::uint64_t seed = 1; seed <= 500 && c->passed; ++seed) {
    std::mt19937_64 rng(seed ^ 0xABCDEF);
    GenParams params;
    params.num_voters = 1 + static_cast<int>(rng() % 6);
    params.num_candidates = 1 + static_cast<int>(rng() % 6);
    params.committee_size =
        1 + static_cast<int>(rng() % std::min(params.num_candidates, 4));
    static const Rational densities[] = {frac(1, 4), frac(1, 2), frac(3, 4)};
    params.density = densities[seed % 3];
    params.seed = seed * 31 + 7;
    const Instance instance = generate_instance(params);

    BwGcrOutput output;
    try {
      output = run_bw_gcr(instance);
    } catch (const std::exception& e) {
      Runner::fail(c, std::string("run failed: ") + e.what() + at_seed(seed));
      continue;
    }

    if (!check_strong_ufs(instance, output.shares).satisfied) {
      Runner::fail(c, "strong-ufs violated" + at_seed(seed));
    }
    if (!check_lottery(Axiom::Fjr, instance, output.lottery, limits).satisfied) {
      Runner::fail(c, "fjr violated" + at_seed(seed));
    }
    for (const auto& entry : output.lottery.entries) {
      if (entry.committee.size() != instance.committee_size) {
        Runner::fail(c, "support committee of wrong size" + at_seed(seed));
      }
      if (!is_subset(output.trace.committee, entry.committee.members)) {
        Runner::fail(c, "support committee misses a granted candidate" + at_seed(seed));
      }
    }

    // criterion 3: budget inspection per the assignment laws
    const int n = instance.num_voters;
    const int k = instance.committee_size;
    Rational base_total;
    for (const auto& step : output.trace.steps) {
      bool any_positive = false;
      for (const auto& group : unanimous_partition(step.voters, instance)) {
        const Rational base = max(
            Rational(0), Rational(k, n) - Rational(step.depth, static_cast<long>(group.size())));
        const bool covered =
            static_cast<long long>(step.depth) * n >= static_cast<long long>(group.size()) * k;
        if (base.is_zero() != covered) {
          Runner::fail(cross.spend_bounds, "zero-budget law violated" + at_seed(seed));
        }
        if (!base.is_zero()) any_positive = true;
        base_total += base * Rational(static_cast<long>(group.size()));
        cross.spend_checks += 1;
      }
      if (any_positive && step.depth != static_cast<int>(step.candidates.size())) {
        Runner::fail(cross.spend_bounds,
                     "positive budget without depth matching the granted set" + at_seed(seed));
      }
      cross.spend_checks += 1;
    }
    if (base_total > Rational(output.residual_seats)) {
      Runner::fail(cross.spend_bounds, "negative residual" + at_seed(seed));
    }
    Rational budget_total;
    for (int i = 0; i < n; ++i) {
      budget_total += output.budgets[i];
      if (!std::binary_search(output.trace.covered_voters.begin(),
                              output.trace.covered_voters.end(), i)) {
        if (output.budgets[i] < Rational(k, n)) {
          Runner::fail(cross.spend_bounds, "active voter below fair share" + at_seed(seed));
        }
        cross.spend_checks += 1;
      }
    }
    if (budget_total != Rational(output.residual_seats)) {
      Runner::fail(cross.spend_bounds, "budgets do not sum to the residual seats" + at_seed(seed));
    }
    cross.spend_checks += 2;

    check_hierarchy(cross, instance, output.shares, output.lottery, seed);
  }
  runner.finish(c);
}

void criterion_5_regressions(Runner& runner) {
  auto* c = runner.begin(5, "counterexample regressions with exact witnesses");

  {  // multi-seat claim fails while the whole-group share holds
    const Instance instance = two_voter_overlap();
    const auto pjr = check_pjr(instance, committee_of({2, 3, 4, 5}));
    Runner::expect(c,
                   !pjr.satisfied && pjr.witness && pjr.witness->level == 2 &&
                       pjr.witness->voters == std::vector<int>{0},
                   "overlap instance: expected the two-seat claim of voter 1 to fail");
    Runner::expect(c,
                   check_gfs(instance, shares_of({"0/1", "1/1", "1/1", "1/1", "1/1"})).satisfied,
                   "overlap instance: integral shares should clear the whole-group bound");
  }
  {  // bloc committee: representative yet zero share for the minority
    const Instance instance = bloc_with_minority();
    Runner::expect(c, check_ejr(instance, committee_of({1, 2, 3, 4})).satisfied,
                   "bloc committee should be representative");
    Runner::expect(
        c,
        !check_positive_share(instance, shares_of({"1/1", "1/1", "1/1", "1/1", "0/1"})).satisfied,
        "bloc committee should fail positive share");
    Runner::expect(c, check_ejr(instance, committee_of({1, 2, 3, 5})).satisfied,
                   "mixed committee should stay representative");
    Runner::expect(c,
                   check_ifs(instance, shares_of({"1/1", "1/1", "1/1", "0/1", "1/1"})).satisfied,
                   "mixed committee should satisfy the individual floor");
  }
  {  // the cohesive pipeline genuinely loses the whole-group bound
    const Instance instance = overlap_pair_plus_loner();
    const BwGcrOutput output = run_bw_gcr(instance);
    Runner::expect(c, output.shares == shares_of({"1/1", "0/1", "0/1", "1/1"}),
                   "cohesive pipeline shares differ");
    const auto gfs = check_gfs(instance, output.shares);
    Runner::expect(c,
                   !gfs.satisfied && gfs.witness &&
                       gfs.witness->voters == std::vector<int>{0, 1} &&
                       gfs.witness->achieved == Rational(1) &&
                       gfs.witness->required == frac(4, 3),
                   "expected the overlap pair witness 1 < 4/3");
  }
  {  // separations between neighbouring share notions
    const Instance pair = unanimous_pair_plus_loner();
    const auto p1 = shares_of({"2/3", "0/1", "1/1", "1/3"});
    const auto ufs = check_ufs(pair, p1);
    Runner::expect(c,
                   check_strong_ifs(pair, p1).satisfied && !ufs.satisfied && ufs.witness &&
                       ufs.witness->voters == std::vector<int>{0, 1} &&
                       ufs.witness->achieved == frac(2, 3) && ufs.witness->required == frac(4, 3),
                   "pair separation: strong individual floor without the pair bound");

    const Instance chain = chained_pair_plus_loner();
    const auto p2 = shares_of({"2/3", "0/1", "0/1", "1/1", "1/3"});
    const auto gfs = check_gfs(chain, p2);
    Runner::expect(c,
                   check_strong_ufs(chain, p2).satisfied && !gfs.satisfied && gfs.witness &&
                       gfs.witness->voters == std::vector<int>{0, 1} &&
                       gfs.witness->achieved == frac(2, 3) && gfs.witness->required == frac(4, 3),
                   "chain separation: unanimous bounds without the whole-group bound");
  }
  {  // dictator baseline misses the strong individual floor
    const Instance instance = dictator_shortfall();
    const auto [shares, lottery] = random_dictator(instance);
    const auto verdict = check_strong_ifs(instance, shares);
    Runner::expect(c,
                   !verdict.satisfied && verdict.witness &&
                       verdict.witness->achieved == frac(1, 2) &&
                       verdict.witness->required == Rational(1),
                   "dictator baseline: expected the 1/2 < 1 witness");
  }
  runner.finish(c);
}

void criterion_6_oracle_equivalence(Runner& runner) {
  auto* c = runner.begin(6,
                         "200 random instances: candidate-set checkers match literal "
                         "voter-subset references on every committee");
  long comparisons = 0;
  for (std::uint64_t seed = 1; seed <= 200 && c->passed; ++seed) {
    const Instance instance = random_instance(seed * 13 + 5, 7, 7, 5);
    std::vector<int> members(instance.committee_size);

    // walk all size-k committees (at most C(7,3)=35)
    std::vector<int> idx(instance.committee_size);
    for (int j = 0; j < instance.committee_size; ++j) idx[j] = j;
    while (true) {
      for (int j = 0; j < instance.committee_size; ++j) members[j] = idx[j];
      const IntegralCommittee committee{members};
      if (check_ejr(instance, committee).satisfied != oracle_ejr(instance, committee)) {
        Runner::fail(c, "ejr checkers disagree" + at_seed(seed));
      }
      if (check_fjr(instance, committee).satisfied != oracle_fjr(instance, committee)) {
        Runner::fail(c, "fjr checkers disagree" + at_seed(seed));
      }
      ++comparisons;

      int j = instance.committee_size - 1;
      while (j >= 0 && idx[j] == instance.num_candidates - instance.committee_size + j) --j;
      if (j < 0) break;
      ++idx[j];
      for (int l = j + 1; l < instance.committee_size; ++l) idx[l] = idx[l - 1] + 1;
    }
  }
  c->detail = std::to_string(comparisons) + " committees compared";
  runner.finish(c);
}

void criterion_8_rounding(Runner& runner) {
  auto* c = runner.begin(8,
                         "1000 random share vectors (denominators <= 720): decompose and read "
                         "back marginals exactly",
                         30.0);
  std::mt19937_64 rng(0xF00D);
  for (int round = 0; round < 1000 && c->passed; ++round) {
    const int m = 1 + static_cast<int>(rng() % 12);
    const int k = 1 + static_cast<int>(rng() % m);
    const auto shares = random_shares(rng, m, k, 720);
    RandomizedCommittee lottery;
    try {
      lottery = decompose(shares);
    } catch (const std::exception& e) {
      Runner::fail(c, std::string("decompose failed: ") + e.what());
      break;
    }
    if (marginals(lottery, m) != shares) Runner::fail(c, "marginals drifted");
    if (lottery.support_size() > m) Runner::fail(c, "support larger than the candidate count");
    for (const auto& entry : lottery.entries) {
      if (entry.committee.size() != k) Runner::fail(c, "support committee of wrong size");
    }
  }
  runner.finish(c);
}

}  // namespace

int main() {
  Runner runner;
  CrossChecks cross;

  criterion_1_exact_trace(runner);

  // criteria 3 and 7 aggregate assertions made while criteria 2 and 4 run
  cross.spend_bounds = runner.begin(3, "spending and budget laws on every pipeline run");
  cross.hierarchy = runner.begin(7, "hierarchy implications across all produced outcomes");

  criterion_2_completion_suite(runner, cross);
  criterion_4_cohesive_suite(runner, cross);

  cross.spend_bounds->detail = std::to_string(cross.spend_checks) + " inspections";
  cross.hierarchy->detail = std::to_string(cross.hierarchy_outcomes) + " outcomes";

  criterion_5_regressions(runner);
  criterion_6_oracle_equivalence(runner);
  criterion_8_rounding(runner);

  const int failures = runner.report();
  if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
