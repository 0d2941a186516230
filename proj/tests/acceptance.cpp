// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// the allowed budget. Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "cli_runner.hpp"
#include "gridlink/linking.hpp"
#include "gridlink/moment_engine.hpp"
#include "gridlink/oracle.hpp"
#include "gridlink/parallel.hpp"
#include "gridlink/sampler.hpp"
#include "gridlink/type_census.hpp"

using namespace gridlink;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = Clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.ok = false;
    outcome.detail << " [exception: " << e.what() << "]";
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = seconds < budget_seconds;
  const bool passed = outcome.ok && in_time;
  if (!passed) ++failures;
  std::printf("criterion %2d %s  %s  (%.3f s, budget %g s)%s%s\n", id,
              passed ? "PASS" : "FAIL", title.c_str(), seconds, budget_seconds,
              in_time ? "" : " [over budget]", outcome.detail.str().c_str());
  std::fflush(stdout);
}

bool within(double estimate, double target, double se, double k = 3.0) {
  return std::abs(estimate - target) <= k * se;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

int main() {
  const int threads = configured_threads();
  const SequenceType joined = parse_type("{({1,2})}");
  const SequenceType chain = parse_type("{({1},{2})}");
  auto sv = [](int a, int b) { return SignVector({a, b}); };

  criterion(1, "Hopf link has lk +1 and its mirror -1", 1e-3, [](Outcome& o) {
    const GridLink link =
        make_grid_link(make_permutation({1, 3, 2, 4}), make_permutation({2, 4, 1, 3}));
    const int lk = linking_number(link);
    const int mirrored = linking_number(mirror(link));
    o.detail << " lk=" << lk << " mirror=" << mirrored;
    o.expect(lk == 1, "lk == 1");
    o.expect(mirrored == -1, "mirror lk == -1");
  });

  criterion(2, "a2 = 1/36 with pair breakdown 1/9, 4 x -1/36, 4 x 1/144", 1.0,
            [](Outcome& o) {
              const LeadingCoefficient a2 = leading_coefficient(2);
              std::multiset<std::string> values;
              for (const auto& t : a2.breakdown) values.insert(to_string(t.inner));
              o.detail << " a2=" << to_string(a2.value);
              o.expect(a2.value == Rational(1, 36), "a2 == 1/36");
              o.expect(values == std::multiset<std::string>{"1/9", "-1/36", "-1/36",
                                                            "-1/36", "-1/36", "1/144",
                                                            "1/144", "1/144", "1/144"},
                       "breakdown");
            });

  criterion(3, "two-index ordering counts and arrangement totals", 1.0, [&](Outcome& o) {
    auto cx = [&](const SequenceType& p, const SequenceType& q, SignVector d) {
      return count_orderings(p, q, d, Axis::x);
    };
    auto cy = [&](const SequenceType& p, const SequenceType& q, SignVector d) {
      return count_orderings(p, q, d, Axis::y);
    };
    o.expect(cx(joined, joined, sv(1, 1)) == 1 && cx(joined, joined, sv(-1, 1)) == 0 &&
                 cy(joined, joined, sv(1, 1)) == 1 && cy(joined, joined, sv(-1, 1)) == 0,
             "case 1 counts 1,0,1,0");
    o.expect(count_arrangements(joined, joined, sv(1, 1)) == 2 &&
                 count_arrangements(joined, joined, sv(-1, 1)) == 0,
             "case 1 N = 2, 0");
    o.expect(cx(joined, chain, sv(1, 1)) == 2 && cx(joined, chain, sv(-1, 1)) == 0 &&
                 cy(joined, chain, sv(1, 1)) == 0 && cy(joined, chain, sv(-1, 1)) == 2,
             "case 2 counts 2,0,0,2");
    o.expect(count_arrangements(joined, chain, sv(1, 1)) == 0 &&
                 count_arrangements(joined, chain, sv(-1, 1)) == 8,
             "case 2 N = 0, 8");
    o.expect(cx(chain, chain, sv(1, 1)) == 1 && cx(chain, chain, sv(-1, 1)) == 6 &&
                 cy(chain, chain, sv(1, 1)) == 1 && cy(chain, chain, sv(-1, 1)) == 6,
             "case 3 counts 1,6,1,6");
    o.expect(count_arrangements(chain, chain, sv(1, 1)) == 74 &&
                 count_arrangements(chain, chain, sv(-1, 1)) == 24,
             "case 3 N = 74, 24");
  });

  criterion(4, "odd moments vanish: polynomial, brute force, Monte Carlo", 10 + 60 + 60,
            [&](Outcome& o) {
              auto t0 = Clock::now();
              o.expect(moment_polynomial(1).polynomial.is_zero(), "polynomial u=1 zero");
              o.expect(moment_polynomial(3).polynomial.is_zero(), "polynomial u=3 zero");
              const double ta = std::chrono::duration<double>(Clock::now() - t0).count();
              o.expect(ta < 10, "(a) under 10 s");

              t0 = Clock::now();
              OracleOptions oo;
              oo.threads = threads;
              for (int n : {2, 3}) {
                for (int u : {1, 3}) {
                  o.expect(exact_moment_bruteforce(n, u, oo) == 0,
                           "brute n=" + std::to_string(n) + " u=" + std::to_string(u));
                }
              }
              const double tb = std::chrono::duration<double>(Clock::now() - t0).count();
              o.expect(tb < 60, "(b) under 60 s");

              t0 = Clock::now();
              SamplingPlan plan;
              plan.n = 50;
              plan.samples = 100000;
              plan.seed = 20240401;
              plan.threads = threads;
              const SampleStats stats = estimate_moments(plan, 3);
              const double tc = std::chrono::duration<double>(Clock::now() - t0).count();
              o.detail << " (a) " << fmt(ta) << " s, (b) " << fmt(tb) << " s, (c) " << fmt(tc)
                       << " s; E[lk]=" << fmt(stats.moment(1)) << " se="
                       << fmt(stats.standard_error(1)) << " E[lk^3]=" << fmt(stats.moment(3))
                       << " se=" << fmt(stats.standard_error(3));
              o.expect(within(stats.moment(1), 0, stats.standard_error(1)), "MC E[lk]");
              o.expect(within(stats.moment(3), 0, stats.standard_error(3)), "MC E[lk^3]");
              o.expect(tc < 60, "(c) under 60 s");
            });

  criterion(5, "brute force E[lk^2] at n=3 equals the polynomial at n=3", 60, [&](Outcome& o) {
    OracleOptions oo;
    oo.threads = threads;
    const Rational brute = exact_moment_bruteforce(3, 2, oo);
    const Rational engine = moment_polynomial(2).at(3);
    o.detail << " brute=" << to_string(brute) << " engine=" << to_string(engine);
    o.expect(brute == engine, "exact equality");
  });

  criterion(6, "formula equals geometric scan on 10^4 random links", 10, [](Outcome& o) {
    Rng rng(6060);
    std::uniform_int_distribution<int> pick_n(2, 20);
    int mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
      const GridLink link = sample_link(pick_n(rng), rng);
      if (linking_number(link) != linking_number_geometric(link)) ++mismatches;
    }
    o.detail << " mismatches=" << mismatches;
    o.expect(mismatches == 0, "no mismatches");
  });

  criterion(7, "type census examples, cardinalities and partition identity", 30,
            [](Outcome& o) {
              o.expect(to_string(type_of(std::vector<int>{2, 5, 5, 1}, 5)) ==
                           "{({2,3},{4},{1})}",
                       "(2,5,5,1)");
              o.expect(type_of(std::vector<int>{2, 4, 4, 1}, 5) ==
                           parse_type("{({2,3});({4},{1})}"),
                       "(2,4,4,1)");
              o.expect(type_of(std::vector<int>{4, 2, 1, 4}, 5) ==
                           parse_type("{({1,4});({3},{2})}"),
                       "(4,2,1,4)");
              o.expect(count_sequences_of_type(parse_type("{({1});({2,3},{4})}"), 5) == 5,
                       "#S_5 = 5");
              for (const auto& t : enumerate_types(3).types) {
                for (int n = 4; n <= 7; ++n) {
                  const auto generated = sequences_of_type(t, n);
                  if (count_sequences_of_type(t, n) != static_cast<long>(generated.size())) {
                    o.expect(false, "generator count for " + to_string(t));
                  }
                }
              }
              for (int u = 1; u <= 3; ++u) {
                const auto census = enumerate_types(u);
                for (int n = u + 1; n <= 8; ++n) {
                  BigInt total = 0;
                  for (const auto& t : census.types) total += count_sequences_of_type(t, n);
                  BigInt power = 1;
                  for (int i = 0; i < u; ++i) power *= n;
                  o.expect(total == power, "partition u=" + std::to_string(u) +
                                               " n=" + std::to_string(n));
                }
              }
            });

  criterion(8, "Monte Carlo E[(lk/n)^2] at n=50 within 3 SE of 1/36", 60, [&](Outcome& o) {
    SamplingPlan plan;
    plan.n = 50;
    plan.samples = 100000;
    plan.seed = 7;
    plan.threads = threads;
    const SampleStats stats = estimate_moments(plan, 2);
    const double est = stats.normalized_moment(2, 50);
    const double se = stats.normalized_standard_error(2, 50);
    o.detail << " estimate=" << fmt(est) << " se=" << fmt(se) << " target=" << fmt(1.0 / 36);
    o.expect(within(est, 1.0 / 36, se), "within 3 SE");
  });

  criterion(9, "fourth moment: polynomial vs Monte Carlo at n=20, bound on a4", 600,
            [&](Outcome& o) {
              EngineOptions eo;
              eo.threads = threads;
              const MomentPolynomial m4 = moment_polynomial(4, eo);
              const Rational exact = m4.at(20);
              SamplingPlan plan;
              plan.n = 20;
              plan.samples = 1000000;
              plan.seed = 44;
              plan.threads = threads;
              const SampleStats stats = estimate_moments(plan, 4);
              o.detail << " a4=" << to_string(m4.leading()) << " E[lk^4](20)="
                       << fmt(exact.get_d()) << " MC=" << fmt(stats.moment(4))
                       << " se=" << fmt(stats.standard_error(4));
              o.expect(within(stats.moment(4), exact.get_d(), stats.standard_error(4)),
                       "MC within 3 SE");
              o.expect(m4.leading() <= moment_bound(2), "a4 <= 4!^2 3^4 / 2!^2");
              o.expect(moment_bound(2) == 11664, "bound value");
            });

  criterion(10, "Monte Carlo reports identical across GRIDLINK_THREADS", 120, [](Outcome& o) {
    const char* commands[] = {
        "moments mc --n 20 --u 4 --samples 200000 --seed 11 --json",
        "moments mc --n 15 --u 3 --samples 100000 --seed 12 --antithetic",
        "histogram --n 10 --samples 100000 --seed 13",
        "convergence --n-list 6,12 --samples 50000 --seed 14",
    };
    for (const char* args : commands) {
      const CliResult one = run_cli(args, "GRIDLINK_THREADS=1");
      const CliResult four = run_cli(args, "GRIDLINK_THREADS=4");
      const CliResult automatic = run_cli(args, "GRIDLINK_THREADS=0");
      o.expect(one.exit_code == 0 && !one.out.empty(), std::string("ran: ") + args);
      o.expect(one.out == four.out && one.out == automatic.out,
               std::string("identical: ") + args);
    }
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
