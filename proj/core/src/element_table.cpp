#include "xmodlab/element_table.hpp"

#include <algorithm>

#include "xmodlab/errors.hpp"

namespace xmodlab {

ElementTable::ElementTable(const PermGroup& group, std::uint64_t limit)
    : generators_(group.generators()) {
  if (group.order() > limit)
    throw BoundExceeded("group of order " + std::to_string(group.order()) +
                        " exceeds the enumeration limit " +
                        std::to_string(limit));

  std::vector<Permutation> discovered{group.identity()};
  std::unordered_map<Permutation, std::size_t> seen{{group.identity(), 0}};
  std::vector<std::size_t> tree_parent{0}, tree_gen{0};
  discovered.reserve(group.order());
  for (std::size_t k = 0; k < discovered.size(); ++k) {
    for (std::size_t g = 0; g < generators_.size(); ++g) {
      Permutation next = discovered[k] * generators_[g];
      if (seen.emplace(next, discovered.size()).second) {
        discovered.push_back(std::move(next));
        tree_parent.push_back(k);
        tree_gen.push_back(g);
      }
    }
  }

  std::vector<std::size_t> perm(discovered.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return discovered[a] < discovered[b];
  });
  std::vector<std::size_t> rank(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;

  elements_.reserve(perm.size());
  for (std::size_t i : perm) elements_.push_back(discovered[i]);
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);

  parent_.assign(size(), 0);
  parent_gen_.assign(size(), 0);
  bfs_.reserve(size());
  for (std::size_t k = 0; k < discovered.size(); ++k) {
    bfs_.push_back(rank[k]);
    parent_[rank[k]] = rank[tree_parent[k]];
    parent_gen_[rank[k]] = tree_gen[k];
  }

  mult_.resize(size() * generators_.size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t g = 0; g < generators_.size(); ++g)
      mult_[i * generators_.size() + g] = index_.at(elements_[i] * generators_[g]);
}

std::optional<std::size_t> ElementTable::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ElementTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw NotSubgroup(p.to_string() + " is not an element of the group");
  return it->second;
}

}  // namespace xmodlab
