#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace xmodlab {

using Point = std::uint32_t;

/**
 * A permutation of the points {0, ..., degree-1}, stored as an image array.
 *
 * Composition is left to right: `(p * q)` applies `p` first, so that
 * `x^(p*q) = (x^p)^q`. This matches the right-action convention used
 * everywhere in the library. Textual forms are 1-based cycle notation.
 */
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  /// Throws DegreeMismatch if `images` is not a bijection of {0..n-1}.
  static Permutation from_images(std::vector<Point> images);

  /// `cycles` use 1-based points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation inverse() const;
  /// `this^k` for any integer k.
  Permutation power(long long k) const;
  /// Conjugate `by^-1 * this * by`.
  Permutation conjugate(const Permutation& by) const;

  bool is_identity() const noexcept;
  std::size_t order() const;
  /// Smallest moved point, or degree() if identity.
  Point first_moved_point() const noexcept;

  /// Extends to a larger degree by fixing the new points.
  Permutation extended(std::size_t degree) const;
  /// Shifts the points by `offset` inside a permutation of degree `degree`.
  Permutation shifted(Point offset, std::size_t degree) const;
  /// Restriction to the points [begin, begin+count); these must be invariant.
  Permutation restricted(Point begin, std::size_t count) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Parses cycle notation such as "(1,2)(3,4)" or "()". Whitespace is
/// ignored. If `degree` is 0 the degree is the largest point mentioned.
Permutation parse_permutation(std::string_view text, std::size_t degree);

/// Parses a comma-separated list of permutations: "(1,2),(1,2,3,4)".
/// With `degree` 0, every permutation gets the largest point mentioned.
std::vector<Permutation> parse_permutation_list(std::string_view text,
                                                std::size_t degree);

std::string to_string(const std::vector<Permutation>& perms);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace xmodlab

template <>
struct std::hash<xmodlab::Permutation> : xmodlab::PermutationHash {};
