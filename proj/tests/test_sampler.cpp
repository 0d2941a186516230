#include <doctest.h>

#include <cmath>
#include <map>

#include "gridlink/error.hpp"
#include "gridlink/linking.hpp"
#include "gridlink/oracle.hpp"
#include "gridlink/sampler.hpp"

using namespace gridlink;

namespace {

double within_se(double estimate, double target, double se) {
  return std::abs(estimate - target) / se;
}

}  // namespace

TEST_CASE("permutations are reproducible and validated") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 20; ++i) CHECK(random_permutation(10, a) == random_permutation(10, b));
  Rng c(1);
  CHECK_THROWS_AS(random_permutation(3, c), Error);
  CHECK_THROWS_AS(random_permutation(2, c), Error);
  Rng d(7);
  Rng e(7);
  CHECK(sample_link(2, d) == sample_link(2, e));
}

TEST_CASE("uniformity over S4") {
  Rng rng(2718);
  const int draws = 100000;
  std::map<std::vector<int>, int> freq;
  for (int i = 0; i < draws; ++i) {
    const Permutation p = random_permutation(4, rng);
    ++freq[std::vector<int>(p.values().begin(), p.values().end())];
  }
  CHECK(freq.size() == 24);
  const double expected = draws / 24.0;
  const double sd = std::sqrt(draws * (1.0 / 24) * (23.0 / 24));
  double chi2 = 0;
  for (const auto& [perm, count] : freq) {
    CHECK(std::abs(count - expected) <= 5 * sd);
    chi2 += (count - expected) * (count - expected) / expected;
  }
  // 23 degrees of freedom; the 99.99% quantile is about 56
  CHECK(chi2 < 56);
}

TEST_CASE("stream seeds are distinct per chunk") {
  CHECK(stream_seed(1, 0) != stream_seed(1, 1));
  CHECK(stream_seed(1, 0) != stream_seed(2, 0));
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("standard error against a two-pass computation") {
  Rng rng(8);
  SampleStats stats(2);
  std::vector<long long> values;
  for (int i = 0; i < 5000; ++i) {
    const long long lk = linking_number(sample_link(6, rng));
    values.push_back(lk);
    stats.add(lk);
  }
  for (int u = 1; u <= 2; ++u) {
    double mean = 0;
    for (long long v : values) mean += std::pow(static_cast<double>(v), u);
    mean /= values.size();
    double var = 0;
    for (long long v : values) {
      const double d = std::pow(static_cast<double>(v), u) - mean;
      var += d * d;
    }
    var /= values.size();
    CHECK(stats.moment(u) == doctest::Approx(mean).epsilon(1e-12));
    CHECK(stats.standard_error(u) ==
          doctest::Approx(std::sqrt(var / values.size())).epsilon(1e-9));
  }
  CHECK(Rational(stats.power_sum(1)) == stats.exact_moment(1) * 5000);
}

TEST_CASE("merge equals sequential accumulation") {
  SampleStats a(2);
  SampleStats b(2);
  SampleStats all(2);
  for (long long v = -5; v <= 7; ++v) {
    (v % 2 ? a : b).add(v, static_cast<std::uint64_t>(v + 6));
    all.add(v, static_cast<std::uint64_t>(v + 6));
  }
  a.merge(b);
  CHECK(a.count() == all.count());
  for (int j = 1; j <= 4; ++j) CHECK(a.power_sum(j) == all.power_sum(j));
}

TEST_CASE("samples at n = 3 match the exact distribution") {
  SamplingPlan plan;
  plan.n = 3;
  plan.samples = 100000;
  plan.seed = 31;
  const SampleStats stats = estimate_moments(plan, 2);
  CHECK(within_se(stats.moment(1), 0.0, stats.standard_error(1)) < 3);
  const double exact2 = exact_moment_bruteforce(3, 2).get_d();
  CHECK(within_se(stats.moment(2), exact2, stats.standard_error(2)) < 3);

  const auto dist = exact_lk_distribution(3);
  const LkCounts counts = sample_lk_counts(plan);
  for (const auto& [lk, prob] : dist) {
    const double p = prob.get_d();
    const double expected = p * plan.samples;
    const double sd = std::sqrt(plan.samples * p * (1 - p));
    const auto it = counts.find(lk);
    const double got = it == counts.end() ? 0.0 : static_cast<double>(it->second);
    CHECK(std::abs(got - expected) <= 5 * sd + 1);
  }
  for (const auto& [lk, c] : counts) CHECK(dist.count(lk) == 1);
}

TEST_CASE("results do not depend on thread count") {
  SamplingPlan plan;
  plan.n = 7;
  plan.samples = 70000;
  plan.seed = 5;
  plan.chunk_size = 4096;
  const LkCounts one = sample_lk_counts(plan);
  plan.threads = 4;
  CHECK(sample_lk_counts(plan) == one);
  plan.threads = 3;
  CHECK(sample_lk_counts(plan) == one);
}

TEST_CASE("antithetic sampling zeroes odd power sums") {
  SamplingPlan plan;
  plan.n = 9;
  plan.samples = 20000;
  plan.seed = 77;
  plan.antithetic = true;
  const SampleStats stats = estimate_moments(plan, 2);
  CHECK(stats.count() == 20000);
  CHECK(stats.power_sum(1) == 0);
  CHECK(stats.power_sum(3) == 0);
  CHECK(stats.power_sum(2) > 0);
}

TEST_CASE("histogram") {
  SamplingPlan plan;
  plan.n = 8;
  plan.samples = 40000;
  plan.seed = 13;
  const Histogram h = histogram_normalized_lk(plan, Rational(0));
  CHECK(h.bin_width == Rational(1, 8));
  std::uint64_t total = 0;
  Rational second = 0;
  for (std::size_t i = 0; i < h.bins.size(); ++i) {
    total += h.bins[i].count;
    CHECK(h.bins[i].lo < h.bins[i].hi);
    if (i > 0) CHECK(h.bins[i].lo == h.bins[i - 1].hi);
    const Rational centre = (h.bins[i].lo + h.bins[i].hi) / 2;
    second += centre * centre * static_cast<unsigned long>(h.bins[i].count);
  }
  CHECK(total == h.total);
  CHECK(total == plan.samples);
  // bins of width 1/n hold one attainable value each
  const SampleStats stats = estimate_moments(plan, 2);
  CHECK(second / static_cast<unsigned long>(total) ==
        stats.exact_moment(2) / Rational(64));
  // centres are symmetric about zero
  const Histogram wide = histogram_normalized_lk(plan, Rational(1, 3));
  for (const auto& b : wide.bins) {
    const Rational centre = (b.lo + b.hi) / 2;
    const Rational scaled = centre * 3;
    CHECK(scaled.get_den() == 1);
  }
  CHECK(std::abs(stats.skewness()) <= 3 * std::sqrt(6.0 / plan.samples));
  CHECK_THROWS_AS(histogram_from_counts({{1, 1}}, 2, Rational(-1, 2)), Error);
}

TEST_CASE("histogram at n = 2 converges to the exact distribution") {
  SamplingPlan plan;
  plan.n = 2;
  plan.samples = 200000;
  plan.seed = 3;
  const Histogram h = histogram_normalized_lk(plan, Rational(1, 2));
  const auto dist = exact_lk_distribution(2);
  for (const auto& b : h.bins) {
    const Rational centre = (b.lo + b.hi) / 2;
    const Rational scaled = centre * 2;
    const long long lk = scaled.get_num().get_si();
    const auto it = dist.find(lk);
    const double p = it == dist.end() ? 0.0 : it->second.get_d();
    const double sd = std::sqrt(plan.samples * p * (1 - p));
    CHECK(std::abs(b.count - p * plan.samples) <= 5 * sd + 1);
  }
}

TEST_CASE("ks distance") {
  const LkCounts a{{-1, 1}, {0, 2}, {1, 1}};
  CHECK(ks_distance(a, 2, a, 2) == 0.0);
  const LkCounts b{{0, 1}};
  CHECK(ks_distance(a, 1, b, 1) == doctest::Approx(0.25));
}

TEST_CASE("convergence report") {
  const auto rows = convergence_report({6, 10}, 20000, 9, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].ks_prev < 0);
  CHECK(rows[1].ks_prev >= 0);
  for (const auto& r : rows) {
    CHECK(std::abs(r.moment[0]) <= 3 * r.standard_error[0]);
    CHECK(std::abs(r.moment[2]) <= 3 * r.standard_error[2]);
  }
  const std::string csv = convergence_csv(rows);
  CHECK(csv.rfind("n,samples,m1,se1,m2,se2,m3,se3,m4,se4,ks_prev\n", 0) == 0);
  CHECK(convergence_report({6, 10}, 20000, 9, 1)[1].moment[1] == rows[1].moment[1]);
  CHECK_THROWS_AS(convergence_report({4, 6}, 10, 1), Error);
  CHECK_THROWS_AS(convergence_report({8, 6}, 10, 1), Error);
}
