#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "xmodlab/perm_group.hpp"

namespace xmodlab {

/**
 * Full listing of a small group. Elements are sorted lexicographically by
 * image array, so index 0 is the identity and the order does not depend on
 * the generating set. `right_mult(i, k)` is the index of element i times
 * generator k.
 */
class ElementTable {
 public:
  /// Throws BoundExceeded if |G| exceeds `limit`.
  explicit ElementTable(const PermGroup& group,
                        std::uint64_t limit = kEnumerationLimit);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> find(const Permutation& p) const;
  /// Like find(), but throws NotSubgroup when `p` is not an element.
  std::size_t index_of(const Permutation& p) const;

  std::size_t generator_count() const noexcept { return generators_.size(); }
  const std::vector<Permutation>& generators() const noexcept {
    return generators_;
  }
  std::size_t right_mult(std::size_t i, std::size_t gen) const {
    return mult_[i * generators_.size() + gen];
  }

  /// Breadth-first spanning tree from the identity: parent(i) * generator
  /// parent_generator(i) = element i. Undefined for i = 0.
  std::size_t parent(std::size_t i) const { return parent_[i]; }
  std::size_t parent_generator(std::size_t i) const { return parent_gen_[i]; }
  /// Element indices in breadth-first order (identity first).
  const std::vector<std::size_t>& bfs_order() const noexcept { return bfs_; }

 private:
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t> index_;
  std::vector<std::size_t> mult_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_gen_;
  std::vector<std::size_t> bfs_;
};

}  // namespace xmodlab
