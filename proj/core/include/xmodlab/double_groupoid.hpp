#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "xmodlab/crossed_module.hpp"

namespace xmodlab {

/**
 * A square with edges in P and label m in M:
 *
 *        n
 *     +-----+
 *   w |  m  | e
 *     +-----+
 *        s
 *
 * subject to d(m) = s^-1 w^-1 n e.
 */
struct Square {
  Permutation n, w, e, s, m;

  friend bool operator==(const Square&, const Square&) = default;
  /// (n|w e|s; m)
  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Square& sq);

/// Largest square universe that squares() will enumerate.
inline constexpr std::uint64_t kSquareUniverseLimit = std::uint64_t{1} << 20;

/**
 * The double groupoid with connection of a crossed module d : M -> P.
 * Horizontal composition glues along east/west edges, vertical along
 * south/north:
 *
 *   compose_h: m = m1^(s2) m2      compose_v: m = m2 m1^(e2)
 */
class DoubleGroupoid {
 public:
  explicit DoubleGroupoid(CrossedModule x) : x_(std::move(x)) {}

  const CrossedModule& xmod() const noexcept { return x_; }

  /// The square with the given n, w, e, m; s is forced.
  Square square(const Permutation& n, const Permutation& w, const Permutation& e,
                const Permutation& m) const;
  /// Thin square (m = 1) with the given n, w, e.
  Square thin(const Permutation& n, const Permutation& w, const Permutation& e) const;
  bool is_square(const Square& sq) const;
  bool is_thin(const Square& sq) const { return sq.m.is_identity(); }

  /// Throws EdgeMismatch unless left.e == right.w.
  Square compose_h(const Square& left, const Square& right) const;
  /// Throws EdgeMismatch unless top.s == bottom.n.
  Square compose_v(const Square& top, const Square& bottom) const;

  /// Identity for compose_h on the vertical edge x: w = e = x.
  Square identity_h(const Permutation& x) const;
  /// Identity for compose_v on the horizontal edge x: n = s = x.
  Square identity_v(const Permutation& x) const;
  Square inverse_h(const Square& sq) const;
  Square inverse_v(const Square& sq) const;

  /// (n=g, w=g, e=1, s=1)
  Square connection_plus(const Permutation& g) const;
  /// (n=1, w=1, e=g, s=g)
  Square connection_minus(const Permutation& g) const;

  /// |P|^3 |M|
  std::uint64_t square_count() const;
  bool materializable() const { return square_count() <= kSquareUniverseLimit; }
  /// Every square, ordered by (n, w, e, m). Throws BoundExceeded.
  std::vector<Square> squares() const;

 private:
  CrossedModule x_;
};

/**
 * Recovers a crossed module from the squares with w = e = s = 1: they form
 * a group under compose_h, d reads the north edge, and p acts by composing
 * vertically with thin squares whose side edges are p^-1 above and p below.
 * The group is given by its regular representation.
 */
CrossedModule gamma(const DoubleGroupoid& g);

/// A 2x2 block [[a, b], [c, d]] of composable squares.
struct Block {
  Square a, b, c, d;
};

struct InterchangeReport {
  std::uint64_t blocks = 0;
  bool exhaustive = false;
  std::optional<Block> counterexample;
  bool ok() const noexcept { return !counterexample; }
};

/// Default bound on interchange_class_count() for exhaustive checks.
inline constexpr std::uint64_t kExhaustiveBlockLimit = std::uint64_t{1} << 32;

/**
 * Compares compose_v(compose_h(a, b), compose_h(c, d)) with
 * compose_h(compose_v(a, c), compose_v(b, d)). The composite labels depend
 * only on a.m, d.m and the edges b.s, c.e, d.e once the outer factors
 * c.m^(d.s) and b.m^(d.e) are split off; when there are at most
 * `exhaustive_limit` such choices, one block per choice is checked, which
 * decides all |P|^8 |M|^4 blocks. Otherwise `samples` random blocks drawn
 * with `seed` are checked.
 */
InterchangeReport check_interchange(const DoubleGroupoid& g, std::uint64_t samples,
                                    std::uint32_t seed,
                                    std::uint64_t exhaustive_limit = kExhaustiveBlockLimit);

/// |P|^3 |M|^2, saturating at UINT64_MAX.
std::uint64_t interchange_class_count(const DoubleGroupoid& g);

}  // namespace xmodlab
