#pragma once

#include "bwcv/types.hpp"

namespace bwcv {

/// Writes a fractional committee as an explicit lottery over fixed-size
/// committees with exactly matching marginals.
///
/// Scheme: systematic (quota) rounding. Candidates are laid out as
/// consecutive half-open intervals of length shares[c] on [0, K), ordered by
/// ascending fractional part (ties by index), where K is the integral total
/// of the shares. For an offset u in [0,1), the committee is the set of
/// candidates whose interval contains one of u, u+1, ..., u+K-1; since every
/// share is at most 1, each candidate catches at most one point and every
/// point lands in exactly one interval, so each committee has exactly K
/// members. The offset-to-committee map is piecewise constant with at most
/// |candidates| cells, whose exact lengths give the lottery probabilities.
///
/// Throws ValidationError(InvalidFractional) when shares are outside [0,1]
/// or do not sum to a positive integer. Deterministic.
RandomizedCommittee decompose(const FractionalCommittee& shares);

}  // namespace bwcv
