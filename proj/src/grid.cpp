#include "gridlink/grid.hpp"

#include <string>

#include "gridlink/error.hpp"

namespace gridlink {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const auto size = values_.size();
  if (size % 2 != 0) {
    throw Error(ErrorKind::odd_length,
                "permutation has odd length " + std::to_string(size) +
                    " (position " + std::to_string(size) + " is unpaired)");
  }
  if (size < 4) {
    throw Error(ErrorKind::too_short, "permutation length " +
                                          std::to_string(size) +
                                          " is below the minimum of 4");
  }
  std::vector<std::size_t> seen_at(size + 1, 0);
  for (std::size_t i = 0; i < size; ++i) {
    const int v = values_[i];
    if (v < 1 || static_cast<std::size_t>(v) > size) {
      throw Error(ErrorKind::out_of_range,
                  "entry " + std::to_string(v) + " at position " +
                      std::to_string(i + 1) + " is outside 1.." +
                      std::to_string(size));
    }
    if (seen_at[v] != 0) {
      throw Error(ErrorKind::duplicate_entry,
                  "entry " + std::to_string(v) + " at position " +
                      std::to_string(i + 1) + " repeats position " +
                      std::to_string(seen_at[v]));
    }
    seen_at[v] = i + 1;
  }
}

Permutation make_permutation(std::vector<int> values) {
  return Permutation(std::move(values));
}

GridLink::GridLink(Permutation sigma, Permutation pi)
    : sigma_(std::move(sigma)),
      pi_(std::move(pi)),
      n_(static_cast<int>(sigma_.size() / 2)) {
  if (sigma_.size() != pi_.size()) {
    throw Error(ErrorKind::length_mismatch,
                "sigma has length " + std::to_string(sigma_.size()) +
                    " but pi has length " + std::to_string(pi_.size()));
  }
}

GridLink make_grid_link(Permutation sigma, Permutation pi) {
  return GridLink(std::move(sigma), std::move(pi));
}

LatticePath component_path(const GridLink& link, Component which) {
  const int n = link.n();
  const int offset = which == Component::first ? 0 : n;
  LatticePath path;
  path.vertices.reserve(2 * n);
  for (int k = 1; k <= n; ++k) {
    const int next = k % n + 1;
    const int column = link.sigma().at(offset + k);
    path.vertices.push_back({column, link.pi().at(offset + k)});
    path.vertices.push_back({column, link.pi().at(offset + next)});
  }
  return path;
}

GridLink mirror(const GridLink& link) {
  const int top = link.order() + 1;
  std::vector<int> reflected;
  reflected.reserve(link.order());
  for (int v : link.sigma().values()) reflected.push_back(top - v);
  return GridLink(Permutation(std::move(reflected)), link.pi());
}

}  // namespace gridlink
