#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "xmodlab/permutation.hpp"

namespace xmodlab {

/// Exhaustive-enumeration envelope: groups up to this order may be fully
/// listed for homomorphism checks, fingerprints and validation.
inline constexpr std::uint64_t kEnumerationLimit = 10'000;

/**
 * A permutation group given by generators, with a stabilizer chain built
 * on construction by deterministic Schreier-Sims. At every level the base
 * point is the smallest point moved by that level's strong generators, so
 * the base is increasing and reproducible.
 */
class PermGroup {
 public:
  struct Level {
    Point base_point;
    std::vector<Permutation> strong_generators;
    std::vector<Point> orbit;
    /// transversal[x] maps base_point to x; empty if x is not in the orbit.
    std::vector<std::optional<Permutation>> transversal;
  };

  PermGroup() : PermGroup(1, {}) {}
  /// Throws DegreeMismatch if any generator has a different degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);
  /// Same group, but the chain starts with the given base points (kept even
  /// when their orbits are trivial). Used for pointwise stabilizers.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            const std::vector<Point>& base_prefix);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept {
    return generators_;
  }
  std::uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  bool contains(const Permutation& p) const;
  bool contains_all(const std::vector<Permutation>& perms) const;
  /// Every generator of `other` lies in this group.
  bool contains_group(const PermGroup& other) const;
  bool is_abelian() const;
  /// Conjugating each generator of this group by each generator of
  /// `overgroup` stays inside this group. Requires this <= overgroup.
  bool is_normalized_by(const PermGroup& overgroup) const;

  const std::vector<Level>& stabilizer_chain() const noexcept {
    return chain_;
  }

  /// Strips `p` through the chain starting at `from_level`. Returns the
  /// residue and the level where stripping stopped (chain size if it ran
  /// through every level).
  std::pair<Permutation, std::size_t> sift(const Permutation& p,
                                           std::size_t from_level = 0) const;

  Permutation identity() const { return Permutation(degree_); }

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.order_ == b.order_ &&
           a.contains_group(b);
  }

 private:
  void build_chain(const std::vector<Point>& base_prefix);

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> chain_;
  std::uint64_t order_ = 1;
};

std::ostream& operator<<(std::ostream& os, const PermGroup& g);

}  // namespace xmodlab
