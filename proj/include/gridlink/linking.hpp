#pragma once

#include <span>
#include <vector>

#include "gridlink/grid.hpp"

namespace gridlink {

// +1 when from < probe < to, -1 when to < probe < from, 0 otherwise.
constexpr int betweenness(int from, int to, int probe) noexcept {
  if (from < probe && probe < to) return 1;
  if (to < probe && probe < from) return -1;
  return 0;
}

// Condition A_{k,l} on the x-coordinates: +1 for A (x_k < x'_l < x_{k+1}),
// -1 for A^-1, 0 when the horizontal edge k misses column x'_l. `sigma`
// holds x_1..x_n, x'_1..x'_n; only the relative order of entries matters.
int condition_a(std::span<const int> sigma, int n, int k, int l);

// Condition B_{k,l} on the y-coordinates: +1 for B (y'_{l+1} < y_{k+1} <
// y'_l), -1 for B^-1, 0 otherwise.
int condition_b(std::span<const int> pi, int n, int k, int l);

// Sign of a crossing given the A and B orientations (each -1, 0 or +1).
// A and B agreeing gives +1, disagreeing gives -1, either absent gives 0.
inline constexpr int kCrossingSignTable[3][3] = {
    {+1, 0, -1},
    {0, 0, 0},
    {-1, 0, +1},
};

struct CrossingSign {
  int value = 0;
  bool a = false;
  bool a_inverse = false;
  bool b = false;
  bool b_inverse = false;
};

// epsilon_{k,l}: the crossing between horizontal edge k of component 1 and
// vertical edge l of component 2. Throws Error{index_out_of_range}.
CrossingSign epsilon(const GridLink& link, int k, int l);

int linking_number(const GridLink& link);
// The same double sum over raw 1..2n permutations, skipping validation.
int linking_number(std::span<const int> sigma, std::span<const int> pi);

struct Crossing {
  Component under = Component::first;  // owner of the horizontal edge
  int over_edge = 0;                   // vertical edge index within its component
  int under_edge = 0;                  // horizontal edge index within its component
  GridPoint at;
  int sign = 0;
};

// All crossings between a vertical edge of one component and a horizontal
// edge of the other, found by segment intersection. Sign is
// det(d_over, d_under) with d_over the vertical unit direction.
std::vector<Crossing> geometric_crossings(const GridLink& link);

// Half of the signed sum over all inter-component crossings. Throws
// Error{half_sum_not_integer} if the sum is odd, which cannot happen for a
// correct crossing scan.
int linking_number_geometric(const GridLink& link);

}  // namespace gridlink
