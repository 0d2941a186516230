// gridlink: command-line surface over the grid-link library.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse/usage error,
// 3 internal cross-check mismatch, 4 resource limit, 5 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gridlink/error.hpp"
#include "gridlink/linking.hpp"
#include "gridlink/moment_engine.hpp"
#include "gridlink/oracle.hpp"
#include "gridlink/parallel.hpp"
#include "gridlink/render.hpp"
#include "gridlink/report.hpp"
#include "gridlink/sampler.hpp"
#include "gridlink/text_format.hpp"
#include "gridlink/type_census.hpp"
#include "gridlink/verify.hpp"

namespace {

using gridlink::ErrorKind;
using nlohmann::json;

enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParse = 2,
  kMismatch = 3,
  kLimit = 4,
  kIo = 5,
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::cross_check_mismatch:
    case ErrorKind::half_sum_not_integer:
    case ErrorKind::odd_moment_nonzero:
      return kMismatch;
    case ErrorKind::too_large:
    case ErrorKind::too_many_symbols:
      return kLimit;
    case ErrorKind::io_error:
      return kIo;
    default:
      return kParse;
  }
}

struct DiagramInput {
  std::string sigma;
  std::string pi;
  std::string file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--sigma", sigma, "sigma as comma-separated 1-based values");
    cmd->add_option("--pi", pi, "pi as comma-separated 1-based values");
    cmd->add_option("--input", file, "diagram file: sigma line, then pi line");
  }

  gridlink::GridLink load() const {
    if (!file.empty()) {
      if (!sigma.empty() || !pi.empty()) {
        throw gridlink::Error(ErrorKind::invalid_argument,
                              "use either --input or --sigma/--pi");
      }
      return gridlink::read_grid_link_file(file);
    }
    if (sigma.empty() || pi.empty()) {
      throw gridlink::Error(ErrorKind::invalid_argument,
                            "need --sigma and --pi, or --input");
    }
    return gridlink::parse_grid_link(sigma + "\n" + pi + "\n");
  }
};

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw gridlink::Error(ErrorKind::io_error, "cannot write " + path);
  out << text;
  if (!out) throw gridlink::Error(ErrorKind::io_error, "failed writing " + path);
}

std::vector<int> parse_list(const std::string& text) {
  return gridlink::parse_integer_list(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random 2-component grid links: linking numbers and moments"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  const int threads = gridlink::configured_threads();

  // lk
  auto* lk_cmd = app.add_subcommand("lk", "linking number of a diagram");
  DiagramInput lk_input;
  lk_input.attach(lk_cmd);
  bool lk_crossings = false;
  bool lk_check = false;
  lk_cmd->add_flag("--crossings", lk_crossings, "list inter-component crossings");
  lk_cmd->add_flag("--check", lk_check, "compare with the geometric crossing scan");
  lk_cmd->add_flag("--json", as_json, "machine-readable JSON output");

  // moments
  auto* moments_cmd = app.add_subcommand("moments", "moments of lk");
  moments_cmd->require_subcommand(1);
  int m_u = 2;
  int m_n = 3;
  std::uint64_t m_samples = 100000;
  std::uint64_t m_seed = 1;
  std::uint64_t m_chunk = gridlink::kDefaultChunkSize;
  bool m_breakdown = false;
  bool m_verify_unfiltered = false;
  bool m_cross_check = false;
  bool m_antithetic = false;
  bool m_allow_long = false;
  int m_symbol_limit = 14;
  int m_exhaustive_limit = 10;
  auto* exact_cmd = moments_cmd->add_subcommand("exact", "exact moment polynomial");
  exact_cmd->add_option("--u", m_u, "moment order")->required();
  exact_cmd->add_flag("--breakdown", m_breakdown, "include per-pair inner sums");
  exact_cmd->add_option("--symbol-limit", m_symbol_limit, "largest symbol set to count");
  exact_cmd->add_flag("--verify-unfiltered", m_verify_unfiltered,
                      "also evaluate the sum over all types and compare");
  exact_cmd->add_flag("--cross-check", m_cross_check,
                      "count orders both by DP and by exhaustive scan");
  exact_cmd->add_option("--exhaustive-limit", m_exhaustive_limit,
                        "largest symbol set scanned exhaustively under --cross-check");
  exact_cmd->add_flag("--json", as_json, "machine-readable JSON output");
  auto* mc_cmd = moments_cmd->add_subcommand("mc", "Monte Carlo estimate");
  mc_cmd->add_option("--n", m_n, "grid size parameter n (order 2n)")->required();
  mc_cmd->add_option("--u", m_u, "largest moment order")->required();
  mc_cmd->add_option("--samples", m_samples, "number of sampled links");
  mc_cmd->add_option("--seed", m_seed, "64-bit seed");
  mc_cmd->add_option("--chunk-size", m_chunk, "samples per RNG stream");
  mc_cmd->add_flag("--antithetic", m_antithetic, "pair every draw with its mirror");
  mc_cmd->add_flag("--json", as_json, "machine-readable JSON output");
  auto* brute_cmd = moments_cmd->add_subcommand("brute", "exhaustive enumeration");
  brute_cmd->add_option("--n", m_n, "n in {2, 3}; 4 with --allow-long")->required();
  brute_cmd->add_option("--u", m_u, "moment order")->required();
  brute_cmd->add_flag("--allow-long", m_allow_long, "permit n = 4 (8!^2 diagrams)");
  brute_cmd->add_flag("--json", as_json, "machine-readable JSON output");

  // types
  auto* types_cmd = app.add_subcommand("types", "index-sequence types");
  types_cmd->require_subcommand(1);
  int t_u = 2;
  int t_min = 1;
  int t_n = 5;
  std::string t_seq;
  std::string t_type;
  auto* enum_cmd = types_cmd->add_subcommand("enumerate", "all types of order u");
  enum_cmd->add_option("--u", t_u, "order")->required();
  enum_cmd->add_option("--min-block-seq", t_min,
                       "keep types whose sequences all hold at least this many indices");
  enum_cmd->add_flag("--json", as_json, "machine-readable JSON output");
  auto* of_cmd = types_cmd->add_subcommand("of", "type of an index sequence");
  of_cmd->add_option("--seq", t_seq, "comma-separated sequence")->required();
  of_cmd->add_option("--n", t_n, "modulus n")->required();
  of_cmd->add_flag("--json", as_json, "machine-readable JSON output");
  auto* count_cmd = types_cmd->add_subcommand("count", "number of sequences of a type");
  count_cmd->add_option("--type", t_type, "type literal, e.g. {({1});({2,3},{4})}")
      ->required();
  count_cmd->add_option("--n", t_n, "modulus n")->required();
  count_cmd->add_flag("--json", as_json, "machine-readable JSON output");

  // render
  auto* render_cmd = app.add_subcommand("render", "draw a diagram as SVG");
  DiagramInput render_input;
  render_input.attach(render_cmd);
  std::string render_out;
  bool render_mirror = false;
  render_cmd->add_option("--out", render_out, "output SVG path")->required();
  render_cmd->add_flag("--mirror", render_mirror, "draw the mirror image");
  render_cmd->add_flag("--json", as_json, "machine-readable JSON output");

  // histogram
  auto* hist_cmd = app.add_subcommand("histogram", "histogram of lk/n");
  int h_n = 10;
  std::uint64_t h_samples = 100000;
  std::uint64_t h_seed = 1;
  std::string h_width;
  std::string h_out;
  bool h_antithetic = false;
  hist_cmd->add_option("--n", h_n, "grid size parameter n")->required();
  hist_cmd->add_option("--samples", h_samples, "number of sampled links");
  hist_cmd->add_option("--seed", h_seed, "64-bit seed");
  hist_cmd->add_option("--bin-width", h_width, "bin width as a/b (default 1/n)");
  hist_cmd->add_option("--out", h_out, "write the CSV here instead of stdout");
  hist_cmd->add_flag("--antithetic", h_antithetic, "pair every draw with its mirror");
  hist_cmd->add_flag("--json", as_json, "machine-readable JSON output");

  // convergence
  auto* conv_cmd = app.add_subcommand("convergence", "moments of lk/n along a list of n");
  std::string c_list;
  std::uint64_t c_samples = 100000;
  std::uint64_t c_seed = 1;
  std::string c_out;
  bool c_no_limits = false;
  conv_cmd->add_option("--n-list", c_list, "ascending n values, each > 4")->required();
  conv_cmd->add_option("--samples", c_samples, "samples per n");
  conv_cmd->add_option("--seed", c_seed, "64-bit seed");
  conv_cmd->add_option("--out", c_out, "write the CSV here instead of stdout");
  conv_cmd->add_flag("--no-limits", c_no_limits, "skip the exact a_2, a_4 limits");
  conv_cmd->add_flag("--json", as_json, "machine-readable JSON output");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
  std::string suite = "quick";
  verify_cmd->add_option("suite", suite, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_flag("--json", as_json, "machine-readable JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*lk_cmd) {
      const gridlink::GridLink link = lk_input.load();
      const int lk = gridlink::linking_number(link);
      json out{{"lk", lk}};
      if (lk_check) {
        const int geometric = gridlink::linking_number_geometric(link);
        out["geometric"] = geometric;
        if (geometric != lk) {
          std::cerr << "formula gives " << lk << " but the crossing scan gives "
                    << geometric << "\n";
          if (as_json) print_json(out);
          return kMismatch;
        }
      }
      std::vector<gridlink::Crossing> crossings;
      if (lk_crossings) crossings = gridlink::geometric_crossings(link);
      if (as_json) {
        if (lk_crossings) {
          auto list = json::array();
          for (const auto& c : crossings) {
            list.push_back({{"under", static_cast<int>(c.under)},
                            {"over_edge", c.over_edge},
                            {"under_edge", c.under_edge},
                            {"column", c.at.column},
                            {"row", c.at.row},
                            {"sign", c.sign}});
          }
          out["crossings"] = list;
        }
        print_json(out);
      } else {
        std::cout << lk << "\n";
        for (const auto& c : crossings) {
          std::cout << "crossing under=" << static_cast<int>(c.under)
                    << " over_edge=" << c.over_edge
                    << " under_edge=" << c.under_edge << " at=(" << c.at.column
                    << "," << c.at.row << ") sign=" << (c.sign > 0 ? "+1" : "-1")
                    << "\n";
        }
      }
      return kOk;
    }

    if (*exact_cmd) {
      gridlink::EngineOptions options;
      options.threads = threads;
      options.symbol_limit = m_symbol_limit;
      options.verify_unfiltered = m_verify_unfiltered;
      options.exhaustive_limit = m_exhaustive_limit;
      if (m_cross_check) options.algorithm = gridlink::CountAlgorithm::both;
      const auto moment = gridlink::moment_polynomial(m_u, options, m_breakdown);
      if (as_json) {
        print_json(gridlink::moment_report(moment, m_breakdown));
      } else {
        std::cout << "u=" << moment.order << "\n";
        std::cout << "n_valid=" << moment.n_valid << "\n";
        std::cout << "coefficients=";
        for (int d = 0; d <= moment.order; ++d) {
          std::cout << (d ? " " : "")
                    << gridlink::to_string(moment.polynomial.coefficient(d));
        }
        std::cout << "\na_u=" << gridlink::to_string(moment.leading()) << "\n";
        if (m_breakdown) {
          for (const auto& t : moment.breakdown) {
            if (t.inner == 0) continue;
            std::cout << "pair P=" << gridlink::to_string(t.p)
                      << " Q=" << gridlink::to_string(t.q)
                      << " inner=" << gridlink::to_string(t.inner) << "\n";
          }
        }
      }
      return kOk;
    }

    if (*mc_cmd) {
      gridlink::SamplingPlan plan;
      plan.n = m_n;
      plan.samples = m_samples;
      plan.seed = m_seed;
      plan.chunk_size = m_chunk;
      plan.antithetic = m_antithetic;
      plan.threads = threads;
      const auto stats = gridlink::estimate_moments(plan, m_u);
      json meta = gridlink::run_metadata(m_seed, plan.chunk_size);
      meta["antithetic"] = m_antithetic;
      if (as_json) {
        json out = gridlink::sample_stats_json(stats, m_n);
        out["metadata"] = meta;
        print_json(out);
      } else {
        print_json(meta);
        std::cout << "n=" << m_n << " samples=" << stats.count() << "\n";
        std::cout.precision(10);
        for (int u = 1; u <= m_u; ++u) {
          std::cout << "u=" << u << " estimate=" << stats.moment(u)
                    << " se=" << stats.standard_error(u)
                    << " normalized=" << stats.normalized_moment(u, m_n)
                    << " normalized_se=" << stats.normalized_standard_error(u, m_n)
                    << "\n";
        }
      }
      return kOk;
    }

    if (*brute_cmd) {
      gridlink::OracleOptions options;
      options.threads = threads;
      options.allow_long = m_allow_long;
      if (m_allow_long && m_n == 4) {
        options.progress = [](std::uint64_t done, std::uint64_t total) {
          if (done % 1000 == 0 || done == total) {
            std::cerr << "\rprogress " << done << "/" << total << std::flush;
          }
        };
      }
      const auto moment = gridlink::exact_moment_bruteforce(m_n, m_u, options);
      if (as_json) {
        print_json({{"n", m_n}, {"u", m_u}, {"moment", gridlink::to_string(moment)}});
      } else {
        std::cout << gridlink::to_string(moment) << "\n";
      }
      return kOk;
    }

    if (*enum_cmd) {
      const auto census = gridlink::enumerate_types(t_u, t_min);
      if (as_json) {
        auto list = json::array();
        for (std::size_t i = 0; i < census.types.size(); ++i) {
          list.push_back({{"type", gridlink::to_string(census.types[i])},
                          {"min_n", census.min_n[i]}});
        }
        print_json({{"u", t_u}, {"count", census.types.size()}, {"types", list}});
      } else {
        for (const auto& t : census.types) std::cout << gridlink::to_string(t) << "\n";
      }
      return kOk;
    }

    if (*of_cmd) {
      const auto seq = parse_list(t_seq);
      if (static_cast<int>(seq.size()) >= t_n) {
        throw gridlink::Error(ErrorKind::invalid_argument,
                              "sequence length must be below n");
      }
      const auto type = gridlink::type_of(seq, t_n);
      if (as_json) {
        print_json({{"type", gridlink::to_string(type)}, {"min_n", type.min_n()}});
      } else {
        std::cout << gridlink::to_string(type) << "\n";
      }
      return kOk;
    }

    if (*count_cmd) {
      const auto type = gridlink::parse_type(t_type);
      const auto count = gridlink::count_sequences_of_type(type, t_n);
      if (as_json) {
        print_json({{"type", gridlink::to_string(type)},
                    {"n", t_n},
                    {"count", count.get_str()}});
      } else {
        std::cout << count.get_str() << "\n";
      }
      return kOk;
    }

    if (*render_cmd) {
      gridlink::GridLink link = render_input.load();
      if (render_mirror) link = gridlink::mirror(link);
      gridlink::write_svg(link, render_out);
      if (as_json) {
        print_json({{"path", render_out}, {"lk", gridlink::linking_number(link)}});
      } else {
        std::cout << render_out << "\n";
      }
      return kOk;
    }

    if (*hist_cmd) {
      gridlink::SamplingPlan plan;
      plan.n = h_n;
      plan.samples = h_samples;
      plan.seed = h_seed;
      plan.antithetic = h_antithetic;
      plan.threads = threads;
      const gridlink::Rational width =
          h_width.empty() ? gridlink::Rational(0) : gridlink::parse_rational(h_width);
      if (!h_width.empty() && width <= 0) {
        throw gridlink::Error(ErrorKind::invalid_argument, "bin width must be positive");
      }
      const auto hist = gridlink::histogram_normalized_lk(plan, width);
      json meta = gridlink::run_metadata(h_seed, plan.chunk_size);
      meta["bin_width"] = gridlink::to_string(hist.bin_width);
      if (as_json) {
        auto bins = json::array();
        for (const auto& b : hist.bins) {
          bins.push_back({{"bin_lo", gridlink::to_string(b.lo)},
                          {"bin_hi", gridlink::to_string(b.hi)},
                          {"count", b.count}});
        }
        print_json({{"metadata", meta}, {"total", hist.total}, {"bins", bins}});
      } else if (!h_out.empty()) {
        write_text(h_out, gridlink::histogram_csv(hist));
        print_json(meta);
      } else {
        print_json(meta);
        std::cout << gridlink::histogram_csv(hist);
      }
      return kOk;
    }

    if (*conv_cmd) {
      const auto n_list = parse_list(c_list);
      const auto rows =
          gridlink::convergence_report(n_list, c_samples, c_seed, threads);
      json meta = gridlink::run_metadata(c_seed, gridlink::kDefaultChunkSize);
      if (!c_no_limits) {
        gridlink::EngineOptions options;
        options.threads = threads;
        meta["limits"] = {
            {"a2", gridlink::to_string(gridlink::leading_coefficient(2, options).value)},
            {"a4", gridlink::to_string(gridlink::leading_coefficient(4, options).value)}};
      }
      if (as_json) {
        auto list = json::array();
        for (const auto& r : rows) {
          json row{{"n", r.n}, {"samples", r.samples}};
          for (int u = 1; u <= 4; ++u) {
            row["m" + std::to_string(u)] = r.moment[u - 1];
            row["se" + std::to_string(u)] = r.standard_error[u - 1];
          }
          row["ks_prev"] = r.ks_prev < 0 ? json(nullptr) : json(r.ks_prev);
          list.push_back(row);
        }
        print_json({{"metadata", meta}, {"rows", list}});
      } else if (!c_out.empty()) {
        write_text(c_out, gridlink::convergence_csv(rows));
        print_json(meta);
      } else {
        print_json(meta);
        std::cout << gridlink::convergence_csv(rows);
      }
      return kOk;
    }

    if (*verify_cmd) {
      const auto results = gridlink::run_verification(
          suite == "full" ? gridlink::VerifySuite::full : gridlink::VerifySuite::quick,
          threads);
      bool all_passed = true;
      auto checks = json::array();
      auto failed = json::array();
      for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        if (!r.passed) failed.push_back(r.name);
      }
      if (as_json) {
        print_json({{"suite", suite}, {"checks", checks}, {"failed", failed}});
      } else {
        for (const auto& r : results) {
          std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
          if (!r.detail.empty()) std::cout << ": " << r.detail;
          std::cout << "\n";
        }
        std::cout << "failed=" << failed.dump() << "\n";
      }
      return all_passed ? kOk : kVerifyFailed;
    }
  } catch (const gridlink::Error& e) {
    std::cerr << "error [" << gridlink::to_string(e.kind()) << "]: " << e.what()
              << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kOk;
}
