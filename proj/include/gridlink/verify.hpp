#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gridlink/grid.hpp"

namespace gridlink {

enum class VerifySuite { quick, full };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

using LinkingFormula = std::function<int(const GridLink&)>;

// linking_number (or `formula`) against the geometric crossing scan on
// `links` random diagrams with n drawn from 2..20.
CheckResult check_formula_geometry(int links, std::uint64_t seed,
                                   const LinkingFormula& formula);

// Runs every check of the suite; a check that throws is reported as failed.
// `formula` replaces linking_number where the suite evaluates it.
std::vector<CheckResult> run_verification(VerifySuite suite, int threads,
                                          const LinkingFormula& formula = {});

}  // namespace gridlink
