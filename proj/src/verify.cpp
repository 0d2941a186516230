#include "gridlink/verify.hpp"

#include <cmath>

#include "gridlink/error.hpp"
#include "gridlink/linking.hpp"
#include "gridlink/moment_engine.hpp"
#include "gridlink/oracle.hpp"
#include "gridlink/sampler.hpp"
#include "gridlink/type_census.hpp"

namespace gridlink {
namespace {

constexpr std::uint64_t kVerifySeed = 20240601;

CheckResult guarded(const std::string& name,
                    const std::function<std::string()>& body) {
  // body returns an empty string on success, otherwise the failure detail.
  try {
    std::string detail = body();
    return {name, detail.empty(), detail};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

GridLink hopf_link() {
  return GridLink(Permutation({1, 3, 2, 4}), Permutation({2, 4, 1, 3}));
}

std::string check_leading_two(const EngineOptions& options) {
  const auto a2 = leading_coefficient(2, options);
  if (a2.value != Rational(1, 36)) return "a_2 = " + to_string(a2.value);
  int ninth = 0, minus = 0, small = 0;
  for (const auto& t : a2.breakdown) {
    if (t.inner == Rational(1, 9)) ++ninth;
    else if (t.inner == Rational(-1, 36)) ++minus;
    else if (t.inner == Rational(1, 144)) ++small;
  }
  if (ninth != 1 || minus != 4 || small != 4) return "breakdown differs";
  return {};
}

std::string check_two_index_counts(const EngineOptions& options) {
  const auto joined = parse_type("{({1,2})}");
  const auto split = parse_type("{({1},{2})}");
  const SignVector pp({1, 1});
  const SignVector mp({-1, 1});
  struct Case {
    const SequenceType& p;
    const SequenceType& q;
    long x_pp, x_mp, y_pp, y_mp, n_pp, n_mp;
  };
  const Case cases[] = {{joined, joined, 1, 0, 1, 0, 2, 0},
                        {joined, split, 2, 0, 0, 2, 0, 8},
                        {split, split, 1, 6, 1, 6, 74, 24}};
  for (const auto& c : cases) {
    const long got[] = {
        count_orderings(c.p, c.q, pp, Axis::x, options).get_si(),
        count_orderings(c.p, c.q, mp, Axis::x, options).get_si(),
        count_orderings(c.p, c.q, pp, Axis::y, options).get_si(),
        count_orderings(c.p, c.q, mp, Axis::y, options).get_si(),
        count_arrangements(c.p, c.q, pp, options).get_si(),
        count_arrangements(c.p, c.q, mp, options).get_si()};
    const long want[] = {c.x_pp, c.x_mp, c.y_pp, c.y_mp, c.n_pp, c.n_mp};
    for (int i = 0; i < 6; ++i) {
      if (got[i] != want[i]) {
        return "P=" + to_string(c.p) + " Q=" + to_string(c.q) + " entry " +
               std::to_string(i) + ": " + std::to_string(got[i]) + " != " +
               std::to_string(want[i]);
      }
    }
  }
  return {};
}

std::string check_type_examples() {
  struct Example {
    std::vector<int> k;
    const char* type;
  };
  const Example examples[] = {{{2, 5, 5, 1}, "{({2,3},{4},{1})}"},
                              {{2, 4, 4, 1}, "{({2,3});({4},{1})}"},
                              {{4, 2, 1, 4}, "{({1,4});({3},{2})}"}};
  for (const auto& e : examples) {
    const SequenceType got = type_of(e.k, 5);
    if (got != parse_type(e.type)) return to_string(got) + " != " + e.type;
  }
  const auto p = parse_type("{({1});({2,3},{4})}");
  if (count_sequences_of_type(p, 5) != 5) return "|S_{5,P}| != 5";
  return {};
}

std::string check_partition_identity() {
  for (int u = 1; u <= 3; ++u) {
    const auto census = enumerate_types(u);
    for (int n = u + 1; n <= 8; ++n) {
      BigInt total = 0;
      for (const auto& t : census.types) total += count_sequences_of_type(t, n);
      BigInt expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), n, u);
      if (total != expected) {
        return "u=" + std::to_string(u) + " n=" + std::to_string(n) +
               ": " + total.get_str();
      }
    }
  }
  return {};
}

std::string within_three_se(double estimate, double se, double target,
                            const std::string& what) {
  if (std::abs(estimate - target) <= 3 * se) return {};
  return what + ": estimate " + std::to_string(estimate) + " is more than 3 SE (" +
         std::to_string(se) + ") from " + std::to_string(target);
}

}  // namespace

CheckResult check_formula_geometry(int links, std::uint64_t seed,
                                   const LinkingFormula& formula) {
  return guarded("formula_geometry_equivalence", [&]() -> std::string {
    Rng rng(seed);
    std::uniform_int_distribution<int> pick_n(2, 20);
    for (int i = 0; i < links; ++i) {
      const GridLink link = sample_link(pick_n(rng), rng);
      const int by_formula = formula ? formula(link) : linking_number(link);
      const int by_geometry = linking_number_geometric(link);
      if (by_formula != by_geometry) {
        return "link " + std::to_string(i) + " (n=" +
               std::to_string(link.n()) + "): formula " +
               std::to_string(by_formula) + " vs geometry " +
               std::to_string(by_geometry);
      }
    }
    return {};
  });
}

std::vector<CheckResult> run_verification(VerifySuite suite, int threads,
                                          const LinkingFormula& formula) {
  const LinkingFormula lk =
      formula ? formula : LinkingFormula([](const GridLink& l) {
        return linking_number(l);
      });
  EngineOptions options;
  options.threads = threads;
  std::vector<CheckResult> results;

  results.push_back(guarded("hopf_link", [&]() -> std::string {
    const GridLink link = hopf_link();
    if (lk(link) != 1) return "lk = " + std::to_string(lk(link));
    if (lk(mirror(link)) != -1) return "mirror lk = " + std::to_string(lk(mirror(link)));
    return {};
  }));
  results.push_back(check_formula_geometry(1000, kVerifySeed, lk));
  results.push_back(guarded("mirror_antisymmetry", [&]() -> std::string {
    Rng rng(kVerifySeed + 1);
    for (int i = 0; i < 1000; ++i) {
      const GridLink link = sample_link(2 + i % 19, rng);
      if (lk(mirror(link)) != -lk(link)) return "link " + std::to_string(i);
    }
    return {};
  }));
  results.push_back(guarded("type_examples", check_type_examples));
  results.push_back(guarded("partition_identity", check_partition_identity));
  results.push_back(guarded("two_index_counts",
                            [&] { return check_two_index_counts(options); }));
  results.push_back(
      guarded("leading_coefficient_a2", [&] { return check_leading_two(options); }));
  if (suite == VerifySuite::quick) return results;

  OracleOptions oracle;
  oracle.threads = threads;
  results.push_back(guarded("oracle_engine_u2_n3", [&]() -> std::string {
    const Rational brute = exact_moment_bruteforce(3, 2, oracle);
    const Rational engine = moment_polynomial(2, options).at(3);
    if (brute != engine) return to_string(brute) + " != " + to_string(engine);
    return {};
  }));
  results.push_back(guarded("odd_moments_bruteforce", [&]() -> std::string {
    for (int n : {2, 3}) {
      const auto counts = exact_lk_counts(n, oracle);
      for (const auto& [lk_value, c] : counts) {
        const auto mirrored = counts.find(-lk_value);
        if (mirrored == counts.end() || mirrored->second != c) {
          return "asymmetric distribution at n=" + std::to_string(n);
        }
      }
    }
    return {};
  }));
  results.push_back(guarded("odd_moment_polynomials", [&]() -> std::string {
    for (int u : {1, 3}) {
      if (!moment_polynomial(u, options).polynomial.is_zero()) {
        return "u=" + std::to_string(u);
      }
    }
    return {};
  }));
  results.push_back(guarded("fourth_moment_bound", [&]() -> std::string {
    const auto m4 = moment_polynomial(4, options);
    const auto a4 = leading_coefficient(4, options).value;
    if (a4 != m4.leading()) return "a_4 disagrees with the polynomial";
    if (!(a4 <= moment_bound(2))) return "a_4 exceeds the moment bound";
    return {};
  }));
  results.push_back(guarded("monte_carlo_n50", [&]() -> std::string {
    SamplingPlan plan;
    plan.n = 50;
    plan.samples = 100000;
    plan.seed = kVerifySeed;
    plan.threads = threads;
    const SampleStats stats = estimate_moments(plan, 2);
    std::string err = within_three_se(stats.normalized_moment(2, 50),
                                      stats.normalized_standard_error(2, 50),
                                      1.0 / 36.0, "E[(lk/n)^2]");
    if (err.empty()) {
      err = within_three_se(stats.normalized_moment(1, 50),
                            stats.normalized_standard_error(1, 50), 0.0,
                            "E[lk/n]");
    }
    return err;
  }));
  return results;
}

}  // namespace gridlink
