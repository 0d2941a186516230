#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>

#include "gridlink/exact.hpp"
#include "gridlink/moment_engine.hpp"
#include "gridlink/sampler.hpp"

namespace gridlink {

struct OracleOptions {
  // n = 4 (8!^2 diagrams) is refused unless this is set.
  bool allow_long = false;
  int threads = 1;
  // Called after each outer permutation with (done, total).
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

// Linking number of every (sigma, pi) in S_{2n}^2, sigma lexicographic outer,
// pi inner. Throws Error{too_large} for n outside {2, 3} (or 4 with
// allow_long).
LkCounts exact_lk_counts(int n, const OracleOptions& options = {});

// (1/(2n)!^2) * sum of lk^u over all diagrams.
Rational exact_moment_bruteforce(int n, int u,
                                 const OracleOptions& options = {});

std::map<long long, Rational> exact_lk_distribution(
    int n, const OracleOptions& options = {});

struct ConfigurationCounts {
  BigInt joint;     // #{(sigma, pi) : eps_{k_i,l_i} = eps_i for all i}
  BigInt factored;  // sum_eta #{sigma : A^eta} * #{pi : B^(eta*eps)}
};

// Both sides by direct enumeration over S_{2n}; n must be 2 or 3.
ConfigurationCounts condition_config_counts(int n, std::span<const int> k,
                                            std::span<const int> l,
                                            const SignVector& epsilon);

// The joint count, after requiring that it equals the factored sum
// (Error{cross_check_mismatch} otherwise).
BigInt count_condition_configs(int n, std::span<const int> k,
                               std::span<const int> l,
                               const SignVector& epsilon);

}  // namespace gridlink
