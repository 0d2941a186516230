#include "gridlink/linking.hpp"

#include <string>

#include "gridlink/error.hpp"

namespace gridlink {
namespace {

int sign_of(int v) { return (v > 0) - (v < 0); }

struct Segment {
  int fixed;  // column of a vertical edge, row of a horizontal edge
  int from;
  int to;
};

// Vertical edge k (1-based) of a component: column x_k, rows y_k -> y_{k+1}.
Segment vertical_edge(const GridLink& link, int offset, int k) {
  const int next = k % link.n() + 1;
  return {link.sigma().at(offset + k), link.pi().at(offset + k),
          link.pi().at(offset + next)};
}

// Horizontal edge k: row y_{k+1}, columns x_k -> x_{k+1}.
Segment horizontal_edge(const GridLink& link, int offset, int k) {
  const int next = k % link.n() + 1;
  return {link.pi().at(offset + next), link.sigma().at(offset + k),
          link.sigma().at(offset + next)};
}

bool strictly_inside(int v, int a, int b) {
  return (a < v && v < b) || (b < v && v < a);
}

}  // namespace

int condition_a(std::span<const int> sigma, int n, int k, int l) {
  const int next = k % n + 1;
  return betweenness(sigma[k - 1], sigma[next - 1], sigma[n + l - 1]);
}

int condition_b(std::span<const int> pi, int n, int k, int l) {
  const int k_next = k % n + 1;
  const int l_next = l % n + 1;
  return betweenness(pi[n + l_next - 1], pi[n + l - 1], pi[k_next - 1]);
}

CrossingSign epsilon(const GridLink& link, int k, int l) {
  const int n = link.n();
  if (k < 1 || k > n || l < 1 || l > n) {
    throw Error(ErrorKind::index_out_of_range,
                "crossing index (" + std::to_string(k) + ", " +
                    std::to_string(l) + ") outside 1.." + std::to_string(n));
  }
  const int a = condition_a(link.sigma().values(), n, k, l);
  const int b = condition_b(link.pi().values(), n, k, l);
  CrossingSign sign;
  sign.a = a > 0;
  sign.a_inverse = a < 0;
  sign.b = b > 0;
  sign.b_inverse = b < 0;
  sign.value = kCrossingSignTable[a + 1][b + 1];
  return sign;
}

int linking_number(const GridLink& link) {
  return linking_number(link.sigma().values(), link.pi().values());
}

int linking_number(std::span<const int> sigma, std::span<const int> pi) {
  const int n = static_cast<int>(sigma.size() / 2);
  int total = 0;
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      const int a = condition_a(sigma, n, k, l);
      if (a == 0) continue;
      total += kCrossingSignTable[a + 1][condition_b(pi, n, k, l) + 1];
    }
  }
  return total;
}

std::vector<Crossing> geometric_crossings(const GridLink& link) {
  const int n = link.n();
  std::vector<Crossing> crossings;
  for (Component over : {Component::first, Component::second}) {
    const Component under =
        over == Component::first ? Component::second : Component::first;
    const int over_offset = over == Component::first ? 0 : n;
    const int under_offset = under == Component::first ? 0 : n;
    for (int v = 1; v <= n; ++v) {
      const Segment vert = vertical_edge(link, over_offset, v);
      for (int h = 1; h <= n; ++h) {
        const Segment horiz = horizontal_edge(link, under_offset, h);
        if (!strictly_inside(vert.fixed, horiz.from, horiz.to) ||
            !strictly_inside(horiz.fixed, vert.from, vert.to)) {
          continue;
        }
        // d_over = (0, dy), d_under = (dx, 0); det = 0*0 - dy*dx.
        const int dy = sign_of(vert.to - vert.from);
        const int dx = sign_of(horiz.to - horiz.from);
        crossings.push_back(
            {under, v, h, GridPoint{vert.fixed, horiz.fixed}, -dy * dx});
      }
    }
  }
  return crossings;
}

int linking_number_geometric(const GridLink& link) {
  int total = 0;
  for (const Crossing& c : geometric_crossings(link)) total += c.sign;
  if (total % 2 != 0) {
    throw Error(ErrorKind::half_sum_not_integer,
                "signed crossing sum " + std::to_string(total) + " is odd");
  }
  return total / 2;
}

}  // namespace gridlink
