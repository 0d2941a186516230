#pragma once

#include <cstdint>
#include <map>

#include <json.hpp>

#include "gridlink/moment_engine.hpp"
#include "gridlink/sampler.hpp"

namespace gridlink {

inline constexpr const char* kVersion = "1.0.0";

// {seed, rng_family, chunk_size, version}
nlohmann::json run_metadata(std::uint64_t seed, std::uint64_t chunk_size);

// {u, coefficients ("num/den", ascending degree), n_valid, a_u[, pairs]}
nlohmann::json moment_report(const MomentPolynomial& moment,
                             bool include_breakdown);
// Inverse of the coefficient part of moment_report.
Polynomial polynomial_from_report(const nlohmann::json& report);

nlohmann::json pair_terms_json(const std::vector<PairTerm>& terms);

nlohmann::json distribution_json(const std::map<long long, Rational>& dist);

// {n, u_max, samples, moments: [{u, estimate, se, normalized, normalized_se}]}
nlohmann::json sample_stats_json(const SampleStats& stats, int n);

}  // namespace gridlink
