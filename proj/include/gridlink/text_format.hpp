#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gridlink/grid.hpp"

namespace gridlink {

// One line of comma-separated 1-based integers, e.g. "1,3,2,4". Throws
// ParseError naming `line` and the column of the offending token.
Permutation parse_permutation(std::string_view text, std::size_t line = 1);
// Plain integer list in the same syntax, without permutation checks.
std::vector<int> parse_integer_list(std::string_view text,
                                    std::size_t line = 1);

// Two permutation lines, sigma then pi. Blank lines and lines starting with
// '#' are skipped.
GridLink parse_grid_link(std::string_view text);
GridLink read_grid_link_file(const std::string& path);

std::string format_permutation(const Permutation& p);
std::string format_grid_link(const GridLink& link);

}  // namespace gridlink
