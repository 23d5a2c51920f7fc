#include "bwcv/rounding.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "bwcv/core.hpp"

namespace bwcv {

namespace {

Rational fractional_part(const Rational& value) {
  // Shares live in [0,1]: the fractional part is the value itself except for
  // exact 1, which wraps to 0.
  return value == Rational(1) ? Rational(0) : value;
}

}  // namespace

RandomizedCommittee decompose(const FractionalCommittee& shares) {
  const int m = static_cast<int>(shares.shares.size());
  const Rational total = shares.total();
  if (!total.is_integer() || total < Rational(1)) {
    throw ValidationError(ValidationError::Code::InvalidFractional,
                          "shares sum to " + total.str() + ", expected a positive integer");
  }
  const long k = total.to_long();
  require_fractional(shares, total);

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return fractional_part(shares.shares[a]) < fractional_part(shares.shares[b]);
  });

  // cumulative[j] is the right endpoint of the j-th interval in layout order.
  std::vector<Rational> cumulative(m + 1);
  for (int j = 0; j < m; ++j) {
    cumulative[j + 1] = cumulative[j] + shares.shares[order[j]];
  }

  // The committee changes only where some point u + t crosses an interval
  // boundary, i.e. at the fractional parts of the cumulative sums.
  std::vector<Rational> breakpoints{Rational(0)};
  for (int j = 1; j <= m; ++j) {
    Rational frac = cumulative[j];
    while (frac >= Rational(1)) frac -= Rational(1);  // boundaries are <= k, k is small
    breakpoints.push_back(frac);
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  RandomizedCommittee lottery;
  for (std::size_t cell = 0; cell < breakpoints.size(); ++cell) {
    const Rational& offset = breakpoints[cell];
    const Rational cell_length =
        (cell + 1 < breakpoints.size() ? breakpoints[cell + 1] : Rational(1)) - offset;
    if (cell_length.is_zero()) continue;

    IntegralCommittee committee;
    for (long t = 0; t < k; ++t) {
      const Rational point = offset + Rational(t);
      // Interval containing `point`: the unique j with cumulative[j] <= point
      // < cumulative[j+1]; zero-length intervals cannot contain it.
      const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), point);
      const int j = static_cast<int>(it - cumulative.begin()) - 1;
      committee.members.push_back(order[j]);
    }
    std::sort(committee.members.begin(), committee.members.end());
    lottery.entries.push_back({cell_length, std::move(committee)});
  }

  return normalized(std::move(lottery));
}

}  // namespace bwcv
