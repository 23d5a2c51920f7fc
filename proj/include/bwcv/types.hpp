#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "bwcv/rational.hpp"

namespace bwcv {

// Voters and candidates are 0-based indices everywhere inside the library.
// File formats and CLI output use 1-based indices; the conversion happens
// only at the I/O boundary (see io.hpp).

/// An approval election: each voter approves a non-empty set of candidates,
/// and `committee_size` seats are to be filled.
struct Instance {
  int num_voters = 0;
  int num_candidates = 0;
  int committee_size = 0;
  /// ballots[i] is voter i's approval set, sorted ascending, duplicate-free.
  std::vector<std::vector<int>> ballots;
};

/// A concrete committee: a set of candidates, sorted ascending.
struct IntegralCommittee {
  std::vector<int> members;

  bool contains(int candidate) const;
  int size() const { return static_cast<int>(members.size()); }

  friend auto operator<=>(const IntegralCommittee&, const IntegralCommittee&) = default;
};

/// Per-candidate selection probabilities. A valid fractional committee for an
/// instance has every share in [0,1] and shares summing exactly to the
/// committee size (see require_fractional).
struct FractionalCommittee {
  std::vector<Rational> shares;

  const Rational& operator[](int candidate) const { return shares.at(candidate); }
  Rational total() const;

  friend bool operator==(const FractionalCommittee&, const FractionalCommittee&) = default;
};

/// An explicit lottery over committees: committee `entries[j].committee` is
/// drawn with probability `entries[j].probability`. Entries are kept sorted
/// lexicographically by committee so output is deterministic.
struct RandomizedCommittee {
  struct Entry {
    Rational probability;
    IntegralCommittee committee;
  };
  std::vector<Entry> entries;

  int support_size() const { return static_cast<int>(entries.size()); }
};

/// Per-voter spending record: spend[i][c] is what voter i paid toward
/// candidate c, remaining[i] is the budget voter i has left. For any initial
/// budget vector b0, conservation means b0[i] == sum_c spend[i][c] + remaining[i].
struct PaymentLedger {
  std::vector<std::vector<Rational>> spend;
  std::vector<Rational> remaining;
};

/// Raised when input data violates an Instance invariant (or CLI parameters
/// are out of range). The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  enum class Code {
    EmptyBallot,
    KZero,
    KTooLarge,
    CandidateOutOfRange,
    BallotCountMismatch,
    InvalidFractional,
    BadParams,
  };

  ValidationError(Code code, const std::string& message, int index = -1)
      : std::runtime_error(message), code_(code), index_(index) {}

  Code code() const { return code_; }
  /// Offending 0-based voter/candidate index when meaningful, else -1.
  int index() const { return index_; }

 private:
  Code code_;
  int index_;
};

/// Raised when an exhaustive check would exceed the configured enumeration
/// limits. The CLI maps this to exit code 3.
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace bwcv
