#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace gridlink {

// A bijection on {1, ..., 2n} with n >= 2, stored 1-based as given.
class Permutation {
public:
  // Throws Error{duplicate_entry | out_of_range | odd_length | too_short};
  // the message names the offending 1-based position.
  explicit Permutation(std::vector<int> values);

  std::size_t size() const noexcept { return values_.size(); }
  // 1-based access: at(1) is the first entry.
  int at(std::size_t i) const { return values_[i - 1]; }
  std::span<const int> values() const noexcept { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> values_;
};

Permutation make_permutation(std::vector<int> values);

struct GridPoint {
  int column = 0;
  int row = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Closed, oriented, axis-aligned polygon. The first edge (vertices[0] ->
// vertices[1]) is vertical; edges alternate after that and the last vertex
// connects back to the first by a horizontal edge.
struct LatticePath {
  std::vector<GridPoint> vertices;
};

enum class Component { first = 1, second = 2 };

// A 2-component grid diagram of order 2n. Component 1 visits
// (x_1, y_1) -> (x_1, y_2) -> (x_2, y_2) -> ... and component 2 does the
// same over indices n+1..2n; indices wrap inside each block.
class GridLink {
public:
  // Throws Error{length_mismatch} when the permutations differ in length.
  GridLink(Permutation sigma, Permutation pi);

  int n() const noexcept { return n_; }
  int order() const noexcept { return 2 * n_; }
  const Permutation& sigma() const noexcept { return sigma_; }
  const Permutation& pi() const noexcept { return pi_; }

  // Coordinate views, 1-based, k in 1..n. Callers wrap indices themselves
  // (see wrap()).
  int x(int k) const { return sigma_.at(k); }
  int x_prime(int l) const { return sigma_.at(n_ + l); }
  int y(int k) const { return pi_.at(k); }
  int y_prime(int l) const { return pi_.at(n_ + l); }

  // Maps k in 1..n+1 (or any integer) into 1..n cyclically.
  int wrap(int k) const noexcept { return ((k - 1) % n_ + n_) % n_ + 1; }

  friend bool operator==(const GridLink&, const GridLink&) = default;

private:
  Permutation sigma_;
  Permutation pi_;
  int n_;
};

GridLink make_grid_link(Permutation sigma, Permutation pi);

LatticePath component_path(const GridLink& link, Component which);

// Reflection across the vertical centre line: sigma_i -> 2n - sigma_i + 1,
// pi unchanged.
GridLink mirror(const GridLink& link);

}  // namespace gridlink
