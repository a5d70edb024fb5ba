#pragma once

#include <cstdint>
#include <vector>

#include "xmodlab/perm_group.hpp"
#include "xmodlab/presentation.hpp"

namespace xmodlab {

inline constexpr std::size_t kDefaultMaxCosets = std::size_t{1} << 16;

/**
 * Result of a coset enumeration. Cosets are numbered from 0 in order of
 * definition (dead cosets removed); coset 0 is the subgroup itself. Column
 * 2g is generator g, column 2g+1 its inverse.
 */
class CosetTable {
 public:
  static constexpr std::uint32_t kUndefined = UINT32_MAX;

  const Presentation& presentation() const noexcept { return presentation_; }
  const std::vector<Word>& subgroup() const noexcept { return subgroup_; }
  std::size_t coset_count() const noexcept { return rows_; }
  std::size_t column_count() const noexcept { return 2 * presentation_.generator_count(); }
  bool complete() const noexcept { return complete_; }

  std::uint32_t entry(std::size_t coset, std::size_t column) const {
    return table_[coset * column_count() + column];
  }
  /// Image of `coset` under a word, or kUndefined if the trace leaves the table.
  std::uint32_t trace(std::size_t coset, const Word& w) const;

  /// Number of cosets ever defined and the peak number alive at once.
  std::size_t total_defined() const noexcept { return total_defined_; }
  std::size_t max_live() const noexcept { return max_live_; }

 private:
  friend class CosetEnumerator;
  CosetTable(Presentation p, std::vector<Word> sub)
      : presentation_(std::move(p)), subgroup_(std::move(sub)) {}

  Presentation presentation_;
  std::vector<Word> subgroup_;
  std::vector<std::uint32_t> table_;
  std::size_t rows_ = 0;
  bool complete_ = false;
  std::size_t total_defined_ = 0;
  std::size_t max_live_ = 0;
};

/// HLT coset enumeration with immediate coincidence processing and a
/// lookahead pass when the table fills. `max_cosets` bounds the number of
/// rows held at once. Throws CosetLimitExceeded.
CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup,
                        std::size_t max_cosets = kDefaultMaxCosets);

struct PermutationRep {
  PermGroup group;
  /// Action of each presentation generator on the cosets.
  std::vector<Permutation> generator_images;
};

/// Permutation action on the cosets. Throws IncompleteTable.
PermutationRep perm_rep(const CosetTable& table);

}  // namespace xmodlab
