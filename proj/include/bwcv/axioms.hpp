#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bwcv/types.hpp"

namespace bwcv {

/// Enumeration guards for the exhaustive checkers. Checks that walk all voter
/// subsets refuse instances with more than `max_enumerable_voters` voters;
/// checks that walk candidate subsets refuse more than
/// `max_enumerable_candidates` candidates (both also capped at 62 by the
/// bitmask representation). The CLI widens these via BWCV_MAX_N / BWCV_MAX_M.
struct SizeLimits {
  int max_enumerable_voters = 20;
  int max_enumerable_candidates = 20;
};

/// Concrete counterexample to a fairness property: the voter group (and,
/// when relevant, candidate set and representation level) for which the
/// guaranteed inequality fails, with both sides exact.
struct Witness {
  std::vector<int> voters;
  std::vector<int> candidates;
  int level = 0;       ///< required approvals-in-committee (ex-post checks), 0 otherwise
  Rational achieved;   ///< left-hand side actually attained
  Rational required;   ///< violated lower bound (achieved < required)
};

struct Verdict {
  bool satisfied = true;
  std::optional<Witness> witness;  ///< present exactly when violated
};

// --- Representation guarantees of a concrete committee (ex post) ---

/// Every group deserving one seat (>= n/k voters sharing an approved
/// candidate) has some member with an approved committee member.
Verdict check_jr(const Instance& instance, const IntegralCommittee& committee);

/// Every group deserving L seats (>= L*n/k voters sharing >= L approved
/// candidates) collectively approves >= L committee members. Walks voter
/// subsets exhaustively.
Verdict check_pjr(const Instance& instance, const IntegralCommittee& committee,
                  const SizeLimits& limits = {});

/// As PJR, but some single member must approve >= L committee members. Walks
/// candidate subsets; equivalent to the subset-of-voters definition because
/// the maximal witness group of any violating candidate set is itself
/// cohesive and under-represented.
Verdict check_ejr(const Instance& instance, const IntegralCommittee& committee,
                  const SizeLimits& limits = {});

/// No unselected candidate is jointly approved by >= L*n/k voters who all
/// have fewer than L approved committee members. Polynomial.
Verdict check_ejr_plus(const Instance& instance, const IntegralCommittee& committee);

/// For every candidate set T and level b, any group of >= |T|*n/k voters who
/// each approve >= b members of T must contain a voter with >= b approved
/// committee members. Walks candidate subsets.
Verdict check_fjr(const Instance& instance, const IntegralCommittee& committee,
                  const SizeLimits& limits = {});

// --- Expected-representation guarantees of a fractional committee (ex ante) ---

Verdict check_positive_share(const Instance& instance, const FractionalCommittee& shares);

/// u_i >= min(k, |ballot_i|) / n for every voter.
Verdict check_ifs(const Instance& instance, const FractionalCommittee& shares);

/// u_i >= min(k/n, |ballot_i|) for every voter.
Verdict check_strong_ifs(const Instance& instance, const FractionalCommittee& shares);

/// For every maximal group S of identical ballots: u_i >= (|S|/n) * min(k, |ballot|).
Verdict check_ufs(const Instance& instance, const FractionalCommittee& shares);

/// For every maximal group S of identical ballots: u_i >= min(|S|*k/n, |ballot|).
Verdict check_strong_ufs(const Instance& instance, const FractionalCommittee& shares);

/// For every voter set S: the shares of the union of their ballots total at
/// least (1/n) * sum over S of min(k, |ballot_i|). Walks voter subsets.
Verdict check_gfs(const Instance& instance, const FractionalCommittee& shares,
                  const SizeLimits& limits = {});

/// Size-capped group variant: union shares >= min(|S|*k/n, |union|). Not
/// satisfiable in general; kept as a diagnostic. Walks voter subsets.
Verdict check_strong_gfs(const Instance& instance, const FractionalCommittee& shares,
                         const SizeLimits& limits = {});

// --- Named dispatch (CLI and report plumbing) ---

enum class Axiom {
  Jr,
  Pjr,
  Ejr,
  EjrPlus,
  Fjr,
  PositiveShare,
  Ifs,
  StrongIfs,
  Ufs,
  StrongUfs,
  Gfs,
  StrongGfs,
};

/// All axioms in hierarchy order (ex post first).
const std::vector<Axiom>& all_axioms();

std::string to_string(Axiom axiom);
std::optional<Axiom> axiom_from_name(const std::string& name);

/// True for committee properties, false for fractional-committee properties.
bool is_ex_post(Axiom axiom);

Verdict check_committee(Axiom axiom, const Instance& instance, const IntegralCommittee& committee,
                        const SizeLimits& limits = {});
Verdict check_shares(Axiom axiom, const Instance& instance, const FractionalCommittee& shares,
                     const SizeLimits& limits = {});

/// Ex-post axiom over a lottery: satisfied iff every support committee
/// satisfies it; the witness of the first violating committee is returned.
Verdict check_lottery(Axiom axiom, const Instance& instance, const RandomizedCommittee& lottery,
                      const SizeLimits& limits = {});

}  // namespace bwcv
