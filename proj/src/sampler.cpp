#include "gridlink/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "gridlink/error.hpp"
#include "gridlink/linking.hpp"
#include "gridlink/parallel.hpp"

namespace gridlink {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t chunk) noexcept {
  return seed ^ splitmix64(chunk);
}

Permutation random_permutation(int size, Rng& rng) {
  if (size % 2 != 0) {
    throw Error(ErrorKind::odd_length,
                "permutation size " + std::to_string(size) + " is odd");
  }
  if (size < 4) {
    throw Error(ErrorKind::too_short,
                "permutation size " + std::to_string(size) + " is below 4");
  }
  std::vector<int> values(size);
  std::iota(values.begin(), values.end(), 1);
  std::shuffle(values.begin(), values.end(), rng);
  return Permutation(std::move(values));
}

GridLink sample_link(int n, Rng& rng) {
  Permutation sigma = random_permutation(2 * n, rng);
  Permutation pi = random_permutation(2 * n, rng);
  return GridLink(std::move(sigma), std::move(pi));
}

SampleStats::SampleStats(int max_order)
    : max_order_(max_order), sums_(2 * max_order, BigInt(0)) {
  if (max_order < 1) {
    throw Error(ErrorKind::invalid_argument, "max order must be >= 1");
  }
}

SampleStats SampleStats::from_counts(const LkCounts& counts, int max_order) {
  SampleStats stats(max_order);
  for (const auto& [lk, mult] : counts) stats.add(lk, mult);
  return stats;
}

void SampleStats::add(long long lk, std::uint64_t multiplicity) {
  count_ += multiplicity;
  const BigInt weight = BigInt(static_cast<unsigned long>(multiplicity));
  BigInt power = weight;
  const BigInt base = BigInt(static_cast<long>(lk));
  for (auto& sum : sums_) {
    power *= base;
    sum += power;
  }
}

void SampleStats::merge(const SampleStats& other) {
  if (other.max_order_ != max_order_) {
    throw Error(ErrorKind::invalid_argument, "merging stats of different order");
  }
  count_ += other.count_;
  for (std::size_t j = 0; j < sums_.size(); ++j) sums_[j] += other.sums_[j];
}

Rational SampleStats::exact_moment(int u) const {
  if (count_ == 0) throw Error(ErrorKind::invalid_argument, "no samples");
  return make_rational(power_sum(u), BigInt(static_cast<unsigned long>(count_)));
}

double SampleStats::moment(int u) const { return exact_moment(u).get_d(); }

double SampleStats::standard_error(int u) const {
  if (u > max_order_) {
    throw Error(ErrorKind::invalid_argument,
                "no standard error beyond order " + std::to_string(max_order_));
  }
  const Rational m = exact_moment(u);
  const Rational var = exact_moment(2 * u) - m * m;
  const Rational per_sample = var / Rational(BigInt(static_cast<unsigned long>(count_)));
  return std::sqrt(per_sample.get_d());
}

double SampleStats::normalized_moment(int u, int n) const {
  return moment(u) / std::pow(static_cast<double>(n), u);
}

double SampleStats::normalized_standard_error(int u, int n) const {
  return standard_error(u) / std::pow(static_cast<double>(n), u);
}

double SampleStats::skewness() const {
  if (max_order_ < 2) {
    throw Error(ErrorKind::invalid_argument, "skewness needs max order >= 2");
  }
  const Rational mean = exact_moment(1);
  const Rational m2 = exact_moment(2);
  const Rational m3 = exact_moment(3);
  const Rational c2 = m2 - mean * mean;
  const Rational c3 = m3 - 3 * mean * m2 + 2 * mean * mean * mean;
  if (c2 == 0) return 0.0;
  return c3.get_d() / std::pow(c2.get_d(), 1.5);
}

namespace {

LkCounts sample_chunk(const SamplingPlan& plan, std::uint64_t chunk,
                      std::uint64_t draws) {
  Rng rng(stream_seed(plan.seed, chunk));
  LkCounts counts;
  if (plan.antithetic) {
    for (std::uint64_t i = 0; i < draws; i += 2) {
      const GridLink link = sample_link(plan.n, rng);
      ++counts[linking_number(link)];
      ++counts[linking_number(mirror(link))];
    }
  } else {
    for (std::uint64_t i = 0; i < draws; ++i) {
      ++counts[linking_number(sample_link(plan.n, rng))];
    }
  }
  return counts;
}

}  // namespace

LkCounts sample_lk_counts(const SamplingPlan& plan) {
  if (plan.n < 2) throw Error(ErrorKind::invalid_argument, "n must be >= 2");
  if (plan.samples < 1) {
    throw Error(ErrorKind::invalid_argument, "need at least one sample");
  }
  std::uint64_t chunk_size = std::max<std::uint64_t>(plan.chunk_size, 2);
  std::uint64_t samples = plan.samples;
  if (plan.antithetic) {
    chunk_size += chunk_size % 2;
    samples += samples % 2;
  }
  const std::uint64_t chunks = (samples + chunk_size - 1) / chunk_size;
  auto parts = parallel_map(
      chunks,
      [&](std::size_t c) {
        const std::uint64_t begin = c * chunk_size;
        const std::uint64_t draws = std::min(chunk_size, samples - begin);
        return sample_chunk(plan, c, draws);
      },
      plan.threads);
  LkCounts total;
  for (const auto& part : parts) {
    for (const auto& [lk, mult] : part) total[lk] += mult;
  }
  return total;
}

SampleStats estimate_moments(const SamplingPlan& plan, int max_order) {
  return SampleStats::from_counts(sample_lk_counts(plan), max_order);
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Histogram histogram_from_counts(const LkCounts& counts, int n,
                                const Rational& bin_width) {
  if (bin_width <= 0) {
    throw Error(ErrorKind::invalid_argument, "bin width must be positive");
  }
  Histogram hist;
  hist.bin_width = bin_width;
  if (counts.empty()) return hist;
  const BigInt num = bin_width.get_num();
  const BigInt den = bin_width.get_den();
  // lk/n lies in bin floor(lk/(n w) + 1/2) = floor((2 lk den + n num) /
  // (2 n num)).
  auto bin_of = [&](long long lk) {
    return floor_div(2 * BigInt(static_cast<long>(lk)) * den + n * num,
                     2 * n * num);
  };
  const BigInt first = bin_of(counts.begin()->first);
  const BigInt last = bin_of(counts.rbegin()->first);
  const long width = BigInt(last - first + 1).get_si();
  hist.bins.resize(width);
  for (long i = 0; i < width; ++i) {
    const Rational centre = Rational(first + i) * bin_width;
    hist.bins[i].lo = centre - bin_width / 2;
    hist.bins[i].hi = centre + bin_width / 2;
  }
  for (const auto& [lk, mult] : counts) {
    hist.bins[BigInt(bin_of(lk) - first).get_si()].count += mult;
    hist.total += mult;
  }
  return hist;
}

Histogram histogram_normalized_lk(const SamplingPlan& plan,
                                  const Rational& bin_width) {
  const Rational width = bin_width > 0 ? bin_width : Rational(1, plan.n);
  return histogram_from_counts(sample_lk_counts(plan), plan.n,
                               make_rational(width.get_num(), width.get_den()));
}

double ks_distance(const LkCounts& a, int n_a, const LkCounts& b, int n_b) {
  std::uint64_t total_a = 0;
  std::uint64_t total_b = 0;
  for (const auto& [lk, c] : a) total_a += c;
  for (const auto& [lk, c] : b) total_b += c;
  if (total_a == 0 || total_b == 0) return 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  std::uint64_t cum_a = 0;
  std::uint64_t cum_b = 0;
  double best = 0.0;
  // Walk both supports in increasing order of lk/n; lk_a/n_a vs lk_b/n_b is
  // compared exactly as lk_a*n_b vs lk_b*n_a.
  while (ia != a.end() || ib != b.end()) {
    bool take_a = ib == b.end();
    bool take_b = ia == a.end();
    if (!take_a && !take_b) {
      const __int128 lhs = static_cast<__int128>(ia->first) * n_b;
      const __int128 rhs = static_cast<__int128>(ib->first) * n_a;
      take_a = lhs <= rhs;
      take_b = rhs <= lhs;
    }
    if (take_a) cum_a += (ia++)->second;
    if (take_b) cum_b += (ib++)->second;
    const double diff =
        std::abs(static_cast<double>(cum_a) / static_cast<double>(total_a) -
                 static_cast<double>(cum_b) / static_cast<double>(total_b));
    best = std::max(best, diff);
  }
  return best;
}

std::uint64_t convergence_seed(std::uint64_t seed, int n) noexcept {
  return splitmix64(seed ^ static_cast<std::uint64_t>(n));
}

std::vector<ConvergenceRow> convergence_report(const std::vector<int>& n_list,
                                               std::uint64_t samples,
                                               std::uint64_t seed,
                                               int threads) {
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] <= 4 || (i > 0 && n_list[i] <= n_list[i - 1])) {
      throw Error(ErrorKind::invalid_argument,
                  "n list must be strictly ascending with entries > 4");
    }
  }
  std::vector<ConvergenceRow> rows;
  LkCounts previous;
  int previous_n = 0;
  for (int n : n_list) {
    SamplingPlan plan;
    plan.n = n;
    plan.samples = samples;
    plan.seed = convergence_seed(seed, n);
    plan.threads = threads;
    LkCounts counts = sample_lk_counts(plan);
    const SampleStats stats = SampleStats::from_counts(counts, 4);
    ConvergenceRow row;
    row.n = n;
    row.samples = stats.count();
    for (int u = 1; u <= 4; ++u) {
      row.moment[u - 1] = stats.normalized_moment(u, n);
      row.standard_error[u - 1] = stats.normalized_standard_error(u, n);
    }
    if (previous_n > 0) row.ks_prev = ks_distance(previous, previous_n, counts, n);
    rows.push_back(row);
    previous = std::move(counts);
    previous_n = n;
  }
  return rows;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "n,samples,m1,se1,m2,se2,m3,se3,m4,se4,ks_prev\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + "," + std::to_string(row.samples);
    for (int u = 0; u < 4; ++u) {
      out += "," + format_double(row.moment[u]) + "," +
             format_double(row.standard_error[u]);
    }
    out += "," + (row.ks_prev < 0 ? std::string() : format_double(row.ks_prev));
    out += "\n";
  }
  return out;
}

std::string histogram_csv(const Histogram& histogram) {
  std::string out = "bin_lo,bin_hi,count\n";
  for (const auto& bin : histogram.bins) {
    out += to_string(bin.lo) + "," + to_string(bin.hi) + "," +
           std::to_string(bin.count) + "\n";
  }
  return out;
}

}  // namespace gridlink
