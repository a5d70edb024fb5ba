#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "xmodlab/element_table.hpp"
#include "xmodlab/group_hom.hpp"

namespace xmodlab {

/**
 * A crossed module: a boundary homomorphism d : M -> Q together with a right
 * action of Q on M by automorphisms, written m^q, with
 * m^(q1 q2) = (m^q1)^q2.
 *
 * The action is given by one automorphism of M per generator of Q and is
 * extended to all of Q on construction. The axioms are not enforced here;
 * see validate(). Both groups must lie inside the enumeration envelope.
 */
class CrossedModule {
 public:
  /// Throws InvalidAction if the generator automorphisms are not
  /// automorphisms of M or do not define an action of Q.
  CrossedModule(GroupHom boundary, std::vector<GroupHom> action);

  const PermGroup& source() const noexcept { return boundary_.source(); }
  const PermGroup& range() const noexcept { return boundary_.target(); }
  const GroupHom& boundary() const noexcept { return boundary_; }
  const std::vector<GroupHom>& action() const noexcept { return action_; }

  Permutation boundary_of(const Permutation& m) const;
  /// m^q
  Permutation act(const Permutation& m, const Permutation& q) const;

  // Index-level access, using the sorted element tables of M and Q.
  const ElementTable& source_elements() const noexcept { return tables_->m; }
  const ElementTable& range_elements() const noexcept { return tables_->q; }
  std::size_t boundary_index(std::size_t m) const { return tables_->boundary[m]; }
  std::size_t act_index(std::size_t m, std::size_t q) const {
    return tables_->action[q * tables_->m.size() + m];
  }

 private:
  struct Tables {
    ElementTable m;
    ElementTable q;
    std::vector<std::size_t> boundary;
    std::vector<std::size_t> action;
  };

  GroupHom boundary_;
  std::vector<GroupHom> action_;
  std::shared_ptr<const Tables> tables_;
};

/// Largest |M| * |Q| for which the action table is materialised.
inline constexpr std::uint64_t kActionTableLimit = std::uint64_t{1} << 24;

struct ValidationReport {
  bool cm1 = true;  ///< d(m^q) = q^-1 d(m) q
  bool cm2 = true;  ///< m^(d m') = m'^-1 m m'
  bool kernel_central = true;
  bool image_normal = true;
  /// First CM1 counterexample (m, q).
  std::optional<std::pair<Permutation, Permutation>> cm1_witness;
  /// First CM2 counterexample (m, m').
  std::optional<std::pair<Permutation, Permutation>> cm2_witness;

  bool ok() const noexcept { return cm1 && cm2 && kernel_central && image_normal; }
  std::string summary() const;
};

/// Exhaustive check of both axioms over all element pairs.
ValidationReport validate(const CrossedModule& x);

/// 1 : P -> P with conjugation action.
CrossedModule identity_xmod(const PermGroup& p);
/// Inclusion N -> Q with conjugation action. Throws NotNormal.
CrossedModule normal_inclusion_xmod(const PermGroup& n, const PermGroup& q);
/// Conjugation automorphism m -> g^-1 m g of `m`, as a GroupHom.
GroupHom conjugation_automorphism(const PermGroup& m, const Permutation& g);

/// Q / d(M).
PermGroup pi1(const CrossedModule& x);

struct Pi2 {
  PermGroup group;  ///< Ker d
  std::vector<std::int64_t> invariants;
};
/// Ker d with its invariant factors. Throws ValidationFailed if the crossed
/// module is invalid.
Pi2 pi2(const CrossedModule& x);

struct XModMorphism {
  GroupHom source_map;  ///< f : M -> M'
  GroupHom range_map;   ///< g : Q -> Q'
};

/// Checks d' f = g d and f(m^q) = f(m)^g(q) for every m and q.
bool is_morphism(const CrossedModule& x, const CrossedModule& y, const XModMorphism& phi);

/**
 * Searches for an isomorphism of crossed modules. Isomorphisms g of the
 * ranges are enumerated; for each, f is determined by the images of a few
 * elements generating M as a Q-group, and candidates are restricted to the
 * fibre of d' over g(d(u)). Throws SearchBoundExceeded if |M| or |Q|
 * exceeds `bound`.
 */
std::optional<XModMorphism> xmod_isomorphic(const CrossedModule& x, const CrossedModule& y,
                                            std::uint64_t bound = 512);

nlohmann::ordered_json to_json(const CrossedModule& x);
/// Reads {M:{degree,generators}, Q:{degree,generators}, boundary:[...],
/// action:[[...], ...]} with permutations in cycle notation.
CrossedModule crossed_module_from_json(const nlohmann::json& j);

}  // namespace xmodlab
