#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "xmodlab/element_table.hpp"
#include "xmodlab/group_hom.hpp"

namespace xmodlab {

inline constexpr std::uint64_t kIsomorphismSearchBound = 512;

/// Full multiplication table of a small group, indexed like ElementTable.
class CayleyTable {
 public:
  explicit CayleyTable(const PermGroup& group,
                       std::uint64_t limit = kIsomorphismSearchBound);

  const ElementTable& elements() const noexcept { return table_; }
  std::size_t size() const noexcept { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * size() + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t order(std::size_t a) const { return order_[a]; }
  std::size_t centralizer_size(std::size_t a) const { return centralizer_[a]; }

 private:
  ElementTable table_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> centralizer_;
};

/**
 * Extends a partial assignment of generator images (as element indices) to
 * the subgroup they generate. Returns the map on that subgroup (indexed by
 * source element, `npos` outside it) if the assignment is an injective
 * homomorphism there, and nothing otherwise.
 */
std::optional<std::vector<std::size_t>> extend_injective(
    const CayleyTable& source, const CayleyTable& target,
    const std::vector<std::size_t>& gens, const std::vector<std::size_t>& images);

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Calls `visit` on every isomorphism G -> H until it returns true.
/// Returns true if a visit stopped the search. Throws SearchBoundExceeded
/// if |G| exceeds `bound`.
bool for_each_isomorphism(const PermGroup& g, const PermGroup& h,
                          const std::function<bool(const GroupHom&)>& visit,
                          std::uint64_t bound = kIsomorphismSearchBound);

/// A witness isomorphism G -> H, or nothing when none exists.
std::optional<GroupHom> isomorphic(const PermGroup& g, const PermGroup& h,
                                   std::uint64_t bound = kIsomorphismSearchBound);

}  // namespace xmodlab
