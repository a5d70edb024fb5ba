#pragma once

#include <memory>
#include <vector>

#include "xmodlab/perm_group.hpp"

namespace xmodlab {

class ElementTable;

/**
 * A homomorphism between permutation groups, given by the images of the
 * source generators and verified on construction.
 *
 * Sources of order at most kEnumerationLimit are checked by walking the
 * whole Cayley graph; larger sources are checked by testing that the graph
 * subgroup {(g, h(g))} of the direct product is no bigger than the source.
 */
class GroupHom {
 public:
  /// Throws RelationViolated if the assignment does not extend to a
  /// homomorphism, NotSubgroup if an image lies outside `target`.
  GroupHom(PermGroup source, PermGroup target, std::vector<Permutation> images);

  static GroupHom identity(const PermGroup& g);
  static GroupHom inclusion(const PermGroup& sub, const PermGroup& super);

  const PermGroup& source() const noexcept { return source_; }
  const PermGroup& target() const noexcept { return target_; }
  const std::vector<Permutation>& generator_images() const noexcept {
    return images_;
  }

  /// Throws NotSubgroup if `g` is not in the source.
  Permutation operator()(const Permutation& g) const;

  PermGroup kernel() const;
  PermGroup image() const;
  bool is_injective() const;
  bool is_bijective() const;

  /// `this` followed by `next`.
  GroupHom then(const GroupHom& next) const;

 private:
  struct Evaluator;

  PermGroup source_;
  PermGroup target_;
  std::vector<Permutation> images_;
  std::shared_ptr<const Evaluator> eval_;
};

}  // namespace xmodlab
