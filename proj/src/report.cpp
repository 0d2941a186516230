#include "gridlink/report.hpp"

namespace gridlink {

nlohmann::json run_metadata(std::uint64_t seed, std::uint64_t chunk_size) {
  return {{"seed", seed},
          {"rng_family", kRngFamily},
          {"chunk_size", chunk_size},
          {"version", kVersion}};
}

nlohmann::json pair_terms_json(const std::vector<PairTerm>& terms) {
  auto pairs = nlohmann::json::array();
  for (const auto& t : terms) {
    pairs.push_back({{"P", to_string(t.p)},
                     {"Q", to_string(t.q)},
                     {"inner", to_string(t.inner)}});
  }
  return pairs;
}

nlohmann::json moment_report(const MomentPolynomial& moment,
                             bool include_breakdown) {
  nlohmann::json report;
  report["u"] = moment.order;
  auto coeffs = nlohmann::json::array();
  for (int d = 0; d <= moment.order; ++d) {
    coeffs.push_back(to_string(moment.polynomial.coefficient(d)));
  }
  report["coefficients"] = coeffs;
  report["n_valid"] = moment.n_valid;
  report["a_u"] = to_string(moment.leading());
  if (include_breakdown) report["pairs"] = pair_terms_json(moment.breakdown);
  return report;
}

Polynomial polynomial_from_report(const nlohmann::json& report) {
  std::vector<Rational> coeffs;
  for (const auto& c : report.at("coefficients")) {
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return Polynomial(std::move(coeffs));
}

nlohmann::json distribution_json(const std::map<long long, Rational>& dist) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [lk, p] : dist) out[std::to_string(lk)] = to_string(p);
  return out;
}

nlohmann::json sample_stats_json(const SampleStats& stats, int n) {
  nlohmann::json out;
  out["n"] = n;
  out["u_max"] = stats.max_order();
  out["samples"] = stats.count();
  auto moments = nlohmann::json::array();
  for (int u = 1; u <= stats.max_order(); ++u) {
    moments.push_back({{"u", u},
                       {"estimate", stats.moment(u)},
                       {"se", stats.standard_error(u)},
                       {"normalized", stats.normalized_moment(u, n)},
                       {"normalized_se", stats.normalized_standard_error(u, n)},
                       {"power_sum", stats.power_sum(u).get_str()}});
  }
  out["moments"] = moments;
  return out;
}

}  // namespace gridlink
