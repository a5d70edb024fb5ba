#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "xmodlab/perm_group.hpp"
#include "xmodlab/permutation.hpp"
#include "xmodlab/smith.hpp"

namespace xmodlab::testing {

inline Permutation random_permutation(std::size_t degree, std::mt19937& rng) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

inline std::vector<Permutation> random_generators(std::size_t degree, std::size_t count,
                                                  std::mt19937& rng) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < count; ++i) gens.push_back(random_permutation(degree, rng));
  return gens;
}

// Every element of the group generated by `gens`, by closing under products.
inline std::set<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Permutation y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::vector<Permutation> elements(const PermGroup& g) {
  auto s = closure(g.degree(), g.generators());
  return {s.begin(), s.end()};
}

// Images of p followed by q, computed pointwise.
inline std::vector<Point> compose_images(const Permutation& p, const Permutation& q) {
  std::vector<Point> out(p.degree());
  for (Point i = 0; i < p.degree(); ++i) out[i] = q[p[i]];
  return out;
}

inline std::uint64_t element_order(const Permutation& p) {
  std::uint64_t k = 1;
  for (Permutation x = p; !x.is_identity(); x = x * p) ++k;
  return k;
}

// The subgroups of S4 used throughout, one per conjugacy class listed.
inline const std::vector<const char*>& s4_subgroups() {
  static const std::vector<const char*> subs = {
      "()",          "(1,2)",         "(1,2)(3,4)", "(1,2,3)",
      "(1,2),(3,4)", "(1,2)(3,4),(1,3)(2,4)",     "(1,2,3,4)",
      "(1,2),(1,2,3)", "(1,2,3,4),(1,3)", "(1,2,3),(1,2)(3,4)",
      "(1,2),(1,2,3,4)"};
  return subs;
}

inline std::int64_t determinant(IntMatrix m) {
  // Fraction-free Bareiss elimination.
  const std::size_t n = m.size();
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Invariant factors from the gcds of k x k minors.
inline std::vector<std::int64_t> minors_oracle(const IntMatrix& m) {
  const std::size_t rows = m.size(), cols = m[0].size();
  const std::size_t r = std::min(rows, cols);
  std::vector<std::int64_t> divisors{1};
  for (std::size_t k = 1; k <= r; ++k) {
    std::int64_t g = 0;
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        IntMatrix sub;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!rsel[i]) continue;
          std::vector<std::int64_t> row;
          for (std::size_t j = 0; j < cols; ++j)
            if (csel[j]) row.push_back(m[i][j]);
          sub.push_back(std::move(row));
        }
        g = std::gcd(g, determinant(sub));
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    divisors.push_back(g);
  }
  std::vector<std::int64_t> out;
  for (std::size_t k = 1; k <= r; ++k)
    out.push_back(divisors[k] == 0 ? 0 : divisors[k] / divisors[k - 1]);
  return out;
}

inline IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(rows, std::vector<std::int64_t>(cols));
  for (auto& row : m)
    for (auto& x : row) x = entry(rng);
  return m;
}

}  // namespace xmodlab::testing
