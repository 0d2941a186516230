#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gridlink/exact.hpp"
#include "gridlink/grid.hpp"

namespace gridlink {

// Chunk c of a run draws from Rng(stream_seed(seed, c)), where
// stream_seed(seed, c) = seed XOR splitmix64(c).
using Rng = std::mt19937_64;
inline constexpr const char* kRngFamily = "mt19937_64+splitmix64-streams";
inline constexpr std::uint64_t kDefaultChunkSize = std::uint64_t{1} << 14;

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t chunk) noexcept;

// Uniform over S_size. Throws Error{odd_length} / Error{too_short}.
Permutation random_permutation(int size, Rng& rng);
// Two independent uniform permutations of 1..2n.
GridLink sample_link(int n, Rng& rng);

// Exact multiplicities of each observed linking number.
using LkCounts = std::map<long long, std::uint64_t>;

// Exact power sums of lk; normalization by n happens only on read.
class SampleStats {
public:
  // Keeps sums of lk^j for j = 1..2*max_order so that every moment up to
  // max_order has a standard error.
  explicit SampleStats(int max_order);
  static SampleStats from_counts(const LkCounts& counts, int max_order);

  void add(long long lk, std::uint64_t multiplicity = 1);
  void merge(const SampleStats& other);

  int max_order() const noexcept { return max_order_; }
  std::uint64_t count() const noexcept { return count_; }
  const BigInt& power_sum(int j) const { return sums_.at(j - 1); }

  // m_u = (sum lk^u) / count, exactly.
  Rational exact_moment(int u) const;
  double moment(int u) const;
  // sqrt((m_{2u} - m_u^2) / count).
  double standard_error(int u) const;
  // Moment and standard error of lk/n.
  double normalized_moment(int u, int n) const;
  double normalized_standard_error(int u, int n) const;
  // Sample skewness of lk, from central moments.
  double skewness() const;

private:
  int max_order_;
  std::uint64_t count_ = 0;
  std::vector<BigInt> sums_;
};

struct SamplingPlan {
  int n = 2;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = kDefaultChunkSize;
  // Each draw also contributes its mirror image; samples is rounded up to
  // an even count.
  bool antithetic = false;
  int threads = 1;
};

// Linking numbers of plan.samples uniform links. Identical for any thread
// count: chunks use derived streams and are merged in chunk order.
LkCounts sample_lk_counts(const SamplingPlan& plan);

SampleStats estimate_moments(const SamplingPlan& plan, int max_order);

struct HistogramBin {
  Rational lo;
  Rational hi;
  std::uint64_t count = 0;
};

// Bins of width w centred on multiples of w: bin i is [(i-1/2)w, (i+1/2)w).
struct Histogram {
  Rational bin_width;
  std::vector<HistogramBin> bins;
  std::uint64_t total = 0;
};

// Histogram of lk/n from exact counts. Throws Error{invalid_argument} for a
// non-positive width.
Histogram histogram_from_counts(const LkCounts& counts, int n,
                                const Rational& bin_width);
// bin_width <= 0 selects the default 1/n.
Histogram histogram_normalized_lk(const SamplingPlan& plan,
                                  const Rational& bin_width);

// Sup distance between the empirical CDFs of lk_a/n_a and lk_b/n_b.
double ks_distance(const LkCounts& a, int n_a, const LkCounts& b, int n_b);

struct ConvergenceRow {
  int n = 0;
  std::uint64_t samples = 0;
  double moment[4] = {};          // E[(lk/n)^u], u = 1..4
  double standard_error[4] = {};
  double ks_prev = -1;            // negative for the first row
};

// Seed for the run at grid size n: splitmix64(seed XOR n).
std::uint64_t convergence_seed(std::uint64_t seed, int n) noexcept;

// Throws Error{invalid_argument} unless n_list is ascending with every
// entry > 4.
std::vector<ConvergenceRow> convergence_report(const std::vector<int>& n_list,
                                               std::uint64_t samples,
                                               std::uint64_t seed,
                                               int threads = 1);

std::string convergence_csv(const std::vector<ConvergenceRow>& rows);
std::string histogram_csv(const Histogram& histogram);

}  // namespace gridlink
