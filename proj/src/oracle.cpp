#include "gridlink/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "gridlink/error.hpp"
#include "gridlink/linking.hpp"
#include "gridlink/parallel.hpp"

namespace gridlink {
namespace {

std::vector<std::vector<int>> all_permutations(int size) {
  std::vector<int> p(size);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void require_enumerable(int n, bool allow_long) {
  if (n == 2 || n == 3 || (n == 4 && allow_long)) return;
  throw Error(ErrorKind::too_large,
              "exhaustive enumeration over S_" + std::to_string(2 * n) +
                  "^2 is not supported" +
                  (n == 4 ? " without the long-run flag" : ""));
}

}  // namespace

LkCounts exact_lk_counts(int n, const OracleOptions& options) {
  require_enumerable(n, options.allow_long);
  const auto perms = all_permutations(2 * n);
  std::atomic<std::uint64_t> done{0};
  auto parts = parallel_map(
      perms.size(),
      [&](std::size_t s) {
        // Dense accumulator over [-n^2, n^2].
        std::vector<std::uint64_t> counts(2 * n * n + 1, 0);
        for (const auto& pi : perms) {
          ++counts[linking_number(perms[s], pi) + n * n];
        }
        const auto finished = ++done;
        if (options.progress) options.progress(finished, perms.size());
        return counts;
      },
      options.threads);
  LkCounts total;
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (part[i]) total[static_cast<long long>(i) - n * n] += part[i];
    }
  }
  return total;
}

Rational exact_moment_bruteforce(int n, int u, const OracleOptions& options) {
  if (u < 1) throw Error(ErrorKind::invalid_argument, "order must be >= 1");
  const LkCounts counts = exact_lk_counts(n, options);
  BigInt sum = 0;
  BigInt total = 0;
  for (const auto& [lk, c] : counts) {
    BigInt power;
    const BigInt base = static_cast<long>(lk);
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), u);
    sum += power * static_cast<unsigned long>(c);
    total += static_cast<unsigned long>(c);
  }
  return make_rational(sum, total);
}

std::map<long long, Rational> exact_lk_distribution(
    int n, const OracleOptions& options) {
  const LkCounts counts = exact_lk_counts(n, options);
  BigInt total = 0;
  for (const auto& [lk, c] : counts) total += static_cast<unsigned long>(c);
  std::map<long long, Rational> dist;
  for (const auto& [lk, c] : counts) {
    dist[lk] = make_rational(BigInt(static_cast<unsigned long>(c)), total);
  }
  return dist;
}

ConfigurationCounts condition_config_counts(int n, std::span<const int> k,
                                            std::span<const int> l,
                                            const SignVector& epsilon) {
  require_enumerable(n, false);
  const int u = epsilon.size();
  if (static_cast<int>(k.size()) != u || static_cast<int>(l.size()) != u) {
    throw Error(ErrorKind::order_mismatch,
                "index sequences and sign vector differ in length");
  }
  for (int i = 0; i < u; ++i) {
    if (k[i] < 1 || k[i] > n || l[i] < 1 || l[i] > n) {
      throw Error(ErrorKind::index_out_of_range,
                  "index outside 1.." + std::to_string(n));
    }
  }
  const auto perms = all_permutations(2 * n);
  // Per permutation: the A (sigma) or B (pi) orientation of each index, or
  // -1 when some condition is absent.
  auto orientation_mask = [&](const std::vector<int>& p, bool is_sigma) {
    std::uint32_t mask = 0;
    for (int i = 0; i < u; ++i) {
      const int o = is_sigma ? condition_a(p, n, k[i], l[i])
                             : condition_b(p, n, k[i], l[i]);
      if (o == 0) return -1L;
      if (o < 0) mask |= 1u << i;
    }
    return static_cast<long>(mask);
  };
  std::vector<long> a_masks;
  std::vector<long> b_masks;
  std::vector<std::uint64_t> a_count(1u << u, 0);
  std::vector<std::uint64_t> b_count(1u << u, 0);
  for (const auto& p : perms) {
    a_masks.push_back(orientation_mask(p, true));
    b_masks.push_back(orientation_mask(p, false));
    if (a_masks.back() >= 0) ++a_count[a_masks.back()];
    if (b_masks.back() >= 0) ++b_count[b_masks.back()];
  }
  const std::uint32_t eps = epsilon.mask();

  ConfigurationCounts result;
  std::uint64_t joint = 0;
  for (long a : a_masks) {
    if (a < 0) continue;
    for (long b : b_masks) {
      if (b < 0) continue;
      bool match = true;
      for (int i = 0; i < u && match; ++i) {
        const int ai = (a >> i) & 1 ? -1 : 1;
        const int bi = (b >> i) & 1 ? -1 : 1;
        match = kCrossingSignTable[ai + 1][bi + 1] == epsilon.entries()[i];
      }
      if (match) ++joint;
    }
  }
  result.joint = static_cast<unsigned long>(joint);
  result.factored = 0;
  for (std::uint32_t eta = 0; eta < (1u << u); ++eta) {
    result.factored += BigInt(static_cast<unsigned long>(a_count[eta])) *
                       static_cast<unsigned long>(b_count[eta ^ eps]);
  }
  return result;
}

BigInt count_condition_configs(int n, std::span<const int> k,
                               std::span<const int> l,
                               const SignVector& epsilon) {
  const ConfigurationCounts counts = condition_config_counts(n, k, l, epsilon);
  if (counts.joint != counts.factored) {
    throw Error(ErrorKind::cross_check_mismatch,
                "joint count " + counts.joint.get_str() +
                    " differs from factored count " + counts.factored.get_str());
  }
  return counts.joint;
}

}  // namespace gridlink
