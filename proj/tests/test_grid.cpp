#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gridlink/error.hpp"
#include "gridlink/grid.hpp"
#include "gridlink/sampler.hpp"

using namespace gridlink;

namespace {

GridLink hopf_link() {
  return make_grid_link(make_permutation({1, 3, 2, 4}), make_permutation({2, 4, 1, 3}));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::invalid_argument;
}

}  // namespace

TEST_CASE("permutation validation") {
  CHECK(make_permutation({1, 3, 2, 4}).size() == 4);
  CHECK(make_permutation({1, 2, 3, 4, 5, 6}).at(6) == 6);
  CHECK(kind_of([] { make_permutation({1, 1, 2, 4}); }) == ErrorKind::duplicate_entry);
  CHECK(kind_of([] { make_permutation({1, 5, 2, 4}); }) == ErrorKind::out_of_range);
  CHECK(kind_of([] { make_permutation({0, 1, 2, 3}); }) == ErrorKind::out_of_range);
  CHECK(kind_of([] { make_permutation({1, 2, 3}); }) == ErrorKind::odd_length);
  CHECK(kind_of([] { make_permutation({2, 1}); }) == ErrorKind::too_short);
}

TEST_CASE("error messages name the offending position") {
  try {
    make_permutation({1, 2, 2, 4});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find('3') != std::string::npos);
  }
}

TEST_CASE("grid link construction") {
  const GridLink link = hopf_link();
  CHECK(link.n() == 2);
  CHECK(link.order() == 4);
  CHECK(link.x(1) == 1);
  CHECK(link.x(2) == 3);
  CHECK(link.x_prime(1) == 2);
  CHECK(link.x_prime(2) == 4);
  CHECK(link.y(1) == 2);
  CHECK(link.y_prime(2) == 3);
  CHECK(link.wrap(3) == 1);
  CHECK(link.wrap(0) == 2);
  CHECK(kind_of([] {
          make_grid_link(make_permutation({1, 2, 3, 4}),
                         make_permutation({1, 2, 3, 4, 5, 6}));
        }) == ErrorKind::length_mismatch);
}

TEST_CASE("component paths of the Hopf link") {
  const GridLink link = hopf_link();
  const auto first = component_path(link, Component::first).vertices;
  const std::vector<GridPoint> expect_first{{1, 2}, {1, 4}, {3, 4}, {3, 2}};
  CHECK(first == expect_first);
  const auto second = component_path(link, Component::second).vertices;
  const std::vector<GridPoint> expect_second{{2, 1}, {2, 3}, {4, 3}, {4, 1}};
  CHECK(second == expect_second);

  const GridLink identity =
      make_grid_link(make_permutation({1, 2, 3, 4}), make_permutation({1, 2, 3, 4}));
  const std::vector<GridPoint> expect_identity{{1, 1}, {1, 2}, {2, 2}, {2, 1}};
  CHECK(component_path(identity, Component::first).vertices == expect_identity);
}

TEST_CASE("paths alternate and cover every grid line once") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 9;
    const GridLink link = sample_link(n, rng);
    std::multiset<int> columns;
    std::multiset<int> rows;
    for (auto which : {Component::first, Component::second}) {
      const auto v = component_path(link, which).vertices;
      REQUIRE(v.size() == static_cast<std::size_t>(2 * n));
      for (std::size_t i = 0; i < v.size(); ++i) {
        const GridPoint a = v[i];
        const GridPoint b = v[(i + 1) % v.size()];
        if (i % 2 == 0) {
          CHECK(a.column == b.column);
          CHECK(a.row != b.row);
          columns.insert(a.column);
        } else {
          CHECK(a.row == b.row);
          CHECK(a.column != b.column);
          rows.insert(a.row);
        }
      }
    }
    std::multiset<int> all;
    for (int i = 1; i <= 2 * n; ++i) all.insert(i);
    CHECK(columns == all);
    CHECK(rows == all);
  }
}

TEST_CASE("mirror") {
  const GridLink link = hopf_link();
  const GridLink m = mirror(link);
  CHECK(std::ranges::equal(m.sigma().values(), std::vector<int>{4, 2, 3, 1}));
  CHECK(m.pi() == link.pi());
  CHECK(mirror(m) == link);

  Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const GridLink l = sample_link(2 + trial % 7, rng);
    const GridLink ml = mirror(l);
    CHECK(mirror(ml) == l);
    CHECK(ml.pi() == l.pi());
    CHECK(ml.sigma() != l.sigma());
  }
}
