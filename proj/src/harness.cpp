#include "bwcv/harness.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "bwcv/core.hpp"

namespace bwcv {

Instance generate_instance(const GenParams& params) {
  using Code = ValidationError::Code;
  if (params.num_voters < 1 || params.num_candidates < 1) {
    throw ValidationError(Code::BadParams, "generator needs at least one voter and candidate");
  }
  if (params.committee_size < 1 || params.committee_size > params.num_candidates) {
    throw ValidationError(Code::BadParams, "committee size must be in 1..m");
  }
  if (!(params.density > Rational(0)) || params.density > Rational(1)) {
    throw ValidationError(Code::BadParams, "density must be in (0, 1]");
  }

  // Exact acceptance threshold: approve iff draw < floor(density * 2^64);
  // density 1 accepts unconditionally.
  const bool always = params.density == Rational(1);
  std::uint64_t threshold = 0;
  if (!always) {
    // density < 1, so the scaled threshold fits in 64 bits.
    mpz_class scaled = (params.density.numerator() << 64) / params.density.denominator();
    threshold = static_cast<std::uint64_t>(scaled.get_ui());
  }

  std::mt19937_64 rng(params.seed);
  Instance instance;
  instance.num_voters = params.num_voters;
  instance.num_candidates = params.num_candidates;
  instance.committee_size = params.committee_size;
  instance.ballots.resize(params.num_voters);
  for (auto& ballot : instance.ballots) {
    do {
      ballot.clear();
      for (int c = 0; c < params.num_candidates; ++c) {
        if (always || rng() < threshold) ballot.push_back(c);
      }
    } while (ballot.empty());
  }
  return instance;
}

std::pair<FractionalCommittee, RandomizedCommittee> random_dictator(const Instance& instance) {
  const int k = instance.committee_size;
  RandomizedCommittee lottery;
  for (int i = 0; i < instance.num_voters; ++i) {
    IntegralCommittee favourite;
    const auto& ballot = instance.ballots[i];
    for (int c : ballot) {
      if (favourite.size() == k) break;
      favourite.members.push_back(c);
    }
    for (int c = 0; c < instance.num_candidates && favourite.size() < k; ++c) {
      if (!std::binary_search(ballot.begin(), ballot.end(), c)) favourite.members.push_back(c);
    }
    std::sort(favourite.members.begin(), favourite.members.end());
    lottery.entries.push_back({Rational(1, instance.num_voters), std::move(favourite)});
  }
  lottery = normalized(std::move(lottery));
  require_randomized(lottery, k);
  return {marginals(lottery, instance.num_candidates), std::move(lottery)};
}

Rational parse_density(const std::string& text) {
  if (text.find('-') != std::string::npos) {
    throw std::invalid_argument("density must be positive: '" + text + "'");
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational::parse(text);
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("cannot parse density '" + text + "'");
  }
  mpz_class numerator(whole.empty() ? "0" : whole);
  mpz_class scale = 1;
  for (std::size_t d = 0; d < frac.size(); ++d) scale *= 10;
  numerator = numerator * scale + mpz_class(frac);
  mpq_class value(numerator, scale);
  value.canonicalize();
  return Rational(value);
}

namespace {

int env_limit(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace

SizeLimits size_limits_from_env() {
  SizeLimits limits;
  limits.max_enumerable_voters = env_limit("BWCV_MAX_N", limits.max_enumerable_voters);
  limits.max_enumerable_candidates = env_limit("BWCV_MAX_M", limits.max_enumerable_candidates);
  return limits;
}

}  // namespace bwcv
