#include "rrg/oracles.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "rrg/augmentation.hpp"
#include "rrg/coupling.hpp"
#include "rrg/errors.hpp"
#include "rrg/parallel.hpp"
#include "rrg/rng.hpp"

namespace rrg {
namespace {

constexpr std::uint64_t kBlockSize = 1 << 15;

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double x) {
    sum += x;
    sum_sq += x * x;
  }
  Moments& operator+=(const Moments& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    return *this;
  }
};

std::uint64_t block_count(std::uint64_t samples) { return (samples + kBlockSize - 1) / kBlockSize; }

std::uint64_t block_length(std::uint64_t block, std::uint64_t samples) {
  return std::min(kBlockSize, samples - block * kBlockSize);
}

void check_samples(std::uint64_t samples) {
  if (samples == 0) throw DomainError("Monte Carlo needs at least one sample");
}

// Stream-index offsets keep the two simulators on disjoint streams for one seed.
constexpr std::uint64_t kBroadcastStreams = 0;
constexpr std::uint64_t kComponentStreams = std::uint64_t{1} << 40;

}  // namespace

McEstimate McEstimate::from_sums(double sum, double sum_sq, std::uint64_t samples,
                                 std::uint64_t seed) {
  check_samples(samples);
  const double n = static_cast<double>(samples);
  McEstimate e;
  e.mean = sum / n;
  e.samples = samples;
  e.seed = seed;
  if (samples > 1) {
    const double var = std::max(0.0, (sum_sq - n * e.mean * e.mean) / (n - 1.0));
    e.std_error = std::sqrt(var) / std::sqrt(n);
  }
  return e;
}

bool McEstimate::agrees_with(double expected, double sigmas) const {
  // A run with no variance (all samples equal) is checked against the
  // resolution of one sample.
  const double spread = std::max(std::abs(sigmas) * std_error, 1.0 / static_cast<double>(samples));
  return std::abs(mean - expected) <= spread;
}

LocalMax grid_argmax_f(int d, double alpha, std::size_t n_points) {
  if (n_points < 10'000) throw DomainError(fmt::format("grid of {} points below 10^4", n_points));
  LocalMax best{0.0, -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < n_points; ++i) {
    const double beta = alpha * static_cast<double>(i) / static_cast<double>(n_points - 1);
    const double f = f_value(d, alpha, beta);
    if (f > best.f) best = {beta, f};
  }
  return best;
}

BroadcastEstimates mc_broadcast_full_zero(int d, double alpha, std::uint64_t samples,
                                          std::uint64_t seed, unsigned jobs) {
  check_samples(samples);
  const double one_after_zero = 1.0 - conditional_p(alpha);
  (void)full_zero_prob(d, alpha);  // validates (d, alpha)

  struct BlockTally {
    std::uint64_t root_one = 0, zero_zero = 0, full_zero = 0, isolated = 0;
  };
  std::vector<BlockTally> tallies(block_count(samples));

  parallel_for(tallies.size(), jobs, [&](std::size_t block) {
    auto rng = Xoshiro256::stream(seed, kBroadcastStreams + block);
    BlockTally t;
    const auto n = block_length(block, samples);
    for (std::uint64_t s = 0; s < n; ++s) {
      const bool root_one = rng.bernoulli(alpha);
      // children of a 1 are 0 surely; children of a 0 are 1 w.p. 1 - p
      const bool first_child_one = !root_one && rng.bernoulli(one_after_zero);
      t.root_one += root_one;
      t.zero_zero += !root_one && !first_child_one;
      if (root_one || first_child_one) continue;

      bool full_zero = true;
      for (int c = 1; c < d && full_zero; ++c) full_zero = !rng.bernoulli(one_after_zero);
      if (!full_zero) continue;
      ++t.full_zero;

      // every child is 0; it is full-zero iff its d - 1 children are all 0
      bool isolated = true;
      for (int c = 0; c < d && isolated; ++c) {
        bool child_full_zero = true;
        for (int g = 0; g < d - 1 && child_full_zero; ++g) {
          child_full_zero = !rng.bernoulli(one_after_zero);
        }
        isolated = !child_full_zero;
      }
      t.isolated += isolated;
    }
    tallies[block] = t;
  });

  BlockTally total;
  for (const auto& t : tallies) {
    total.root_one += t.root_one;
    total.zero_zero += t.zero_zero;
    total.full_zero += t.full_zero;
    total.isolated += t.isolated;
  }
  const auto bernoulli_estimate = [&](std::uint64_t hits) {
    const double h = static_cast<double>(hits);
    return McEstimate::from_sums(h, h, samples, seed);
  };
  return {bernoulli_estimate(total.root_one), bernoulli_estimate(total.zero_zero),
          bernoulli_estimate(total.full_zero), bernoulli_estimate(total.isolated)};
}

GwComponentEstimate mc_gw_component(int d, double alpha, std::uint64_t samples,
                                    std::uint64_t max_size, std::uint64_t seed, unsigned jobs) {
  check_samples(samples);
  if (max_size == 0) throw DomainError("component cap must be positive");
  const double log_p = std::log1p(-alpha / (1.0 - alpha));
  (void)full_zero_prob(d, alpha);
  const double neighbour_full_zero = std::exp((d - 1.0) * log_p);

  struct BlockTally {
    Moments size;
    std::uint64_t truncated = 0;
  };
  std::vector<BlockTally> tallies(block_count(samples));

  parallel_for(tallies.size(), jobs, [&](std::size_t block) {
    auto rng = Xoshiro256::stream(seed, kComponentStreams + block);
    BlockTally t;
    const auto n = block_length(block, samples);
    for (std::uint64_t s = 0; s < n; ++s) {
      std::uint64_t size = 1;
      std::uint64_t frontier = 0;
      for (int c = 0; c < d; ++c) frontier += rng.bernoulli(neighbour_full_zero);
      while (frontier > 0 && size < max_size) {
        --frontier;
        ++size;
        for (int c = 0; c < d - 1; ++c) frontier += rng.bernoulli(neighbour_full_zero);
      }
      t.size.add(static_cast<double>(size));
      t.truncated += frontier > 0;
    }
    tallies[block] = t;
  });

  Moments size;
  std::uint64_t truncated = 0;
  for (const auto& t : tallies) {
    size += t.size;
    truncated += t.truncated;
  }
  const double tr = static_cast<double>(truncated);
  return {McEstimate::from_sums(size.sum, size.sum_sq, samples, seed),
          McEstimate::from_sums(tr, tr, samples, seed)};
}

double gw_expected_component_size(int d, double alpha) {
  const double q = std::exp((d - 1.0) * std::log1p(-alpha / (1.0 - alpha)));
  const double m = (d - 1.0) * q;
  if (m >= 1.0) return std::numeric_limits<double>::infinity();
  return 1.0 + d * q / (1.0 - m);
}

double fd_derivative_check(int d, double alpha, double beta, double step) {
  if (!(step >= 1e-9 && step <= 1e-5)) {
    throw DomainError(fmt::format("finite-difference step {:.3g} outside [1e-9, 1e-5]", step));
  }
  if (!(beta - step > 0.0 && beta + step < alpha)) {
    throw DomainError("finite-difference stencil leaves (0, alpha)");
  }
  const double analytic = f_derivative(d, alpha, beta);
  const double central = (f_value(d, alpha, beta + step) - f_value(d, alpha, beta - step)) / (2.0 * step);
  return std::abs(analytic - central) / (1.0 + std::abs(analytic));
}

}  // namespace rrg
