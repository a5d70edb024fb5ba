#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "xmodlab/group_hom.hpp"
#include "xmodlab/perm_group.hpp"

namespace xmodlab {

/// Builds a group from generators of a common degree. Throws DegreeMismatch.
PermGroup group_from_generators(std::vector<Permutation> gens, std::size_t degree);

/// Subgroup generated by `candidates`, keeping only those that enlarge the
/// group seen so far.
PermGroup generate_subgroup(std::size_t degree,
                            const std::vector<Permutation>& candidates);

bool is_subgroup(const PermGroup& sub, const PermGroup& group);
bool is_normal(const PermGroup& sub, const PermGroup& group);

/// Smallest normal subgroup of `group` containing `elements`.
/// Throws NotSubgroup if some element is outside `group`.
PermGroup normal_closure(const PermGroup& group,
                         const std::vector<Permutation>& elements);

struct Quotient {
  PermGroup group;     ///< G/N acting regularly on the cosets of N
  GroupHom projection;  ///< G -> G/N
  /// Lexicographically least element of each coset; coset i of the
  /// quotient's domain is N * representatives[i].
  std::vector<Permutation> representatives;
};

/// Throws NotSubgroup / NotNormal.
Quotient quotient(const PermGroup& group, const PermGroup& normal);

PermGroup derived_subgroup(const PermGroup& group);
PermGroup center(const PermGroup& group);

/// Invariant factors d1 | d2 | ... of an abelian group, ascending, with
/// product |G|. The trivial group gives an empty list. Throws NonAbelian.
std::vector<std::int64_t> abelian_invariants(const PermGroup& group);

/// Invariant factors of G/G'.
std::vector<std::int64_t> abelianization_invariants(const PermGroup& group);

struct Fingerprint {
  std::uint64_t order = 1;
  std::vector<std::int64_t> abelianization;
  std::uint64_t center_order = 1;
  std::uint64_t derived_order = 1;
  std::map<std::uint64_t, std::uint64_t> element_orders;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Isomorphism-invariant summary. Throws BoundExceeded above the
/// enumeration limit.
Fingerprint fingerprint(const PermGroup& group);

/// Renders invariant factors as a product of cyclic groups, largest first,
/// e.g. [2,2,2,4] -> "C4 x C2^3"; the trivial group is "1".
std::string cyclic_product_name(const std::vector<std::int64_t>& invariants);

// Named constructors.
PermGroup trivial_group();
PermGroup cyclic(std::size_t n);
PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
/// Dihedral group of the given order (2n). Orders 2 and 4 give C2 and V4.
PermGroup dihedral(std::size_t order);
/// GL(2,3) acting on the 8 nonzero vectors of F_3^2.
PermGroup gl23();
/// The determinant-1 subgroup of gl23(), same action.
PermGroup sl23();
/// Acts on the disjoint union of the two domains.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

}  // namespace xmodlab
