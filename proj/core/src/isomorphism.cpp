#include "xmodlab/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "xmodlab/errors.hpp"
#include "xmodlab/group_ops.hpp"

namespace xmodlab {

CayleyTable::CayleyTable(const PermGroup& group, std::uint64_t limit)
    : table_(group, limit) {
  const std::size_t n = table_.size();
  mul_.resize(n * n);
  inv_.resize(n);
  order_.resize(n);
  centralizer_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      mul_[a * n + b] = table_.index_of(table_[a] * table_[b]);
    inv_[a] = table_.index_of(table_[a].inverse());
    order_[a] = table_[a].order();
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul_[a * n + b] == mul_[b * n + a]) ++centralizer_[a];
}

std::optional<std::vector<std::size_t>> extend_injective(
    const CayleyTable& source, const CayleyTable& target,
    const std::vector<std::size_t>& gens, const std::vector<std::size_t>& images) {
  std::vector<std::size_t> map(source.size(), npos);
  std::vector<bool> used(target.size(), false);
  std::vector<std::size_t> queue{0};
  map[0] = 0;
  used[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    std::size_t q = queue[k];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      std::size_t a = source.mul(q, gens[j]);
      std::size_t b = target.mul(map[q], images[j]);
      if (map[a] == npos) {
        if (used[b]) return std::nullopt;
        map[a] = b;
        used[b] = true;
        queue.push_back(a);
      } else if (map[a] != b) {
        return std::nullopt;
      }
    }
  }
  return map;
}

namespace {

using ClassKey = std::pair<std::size_t, std::size_t>;  // element order, centralizer size

ClassKey key_of(const CayleyTable& t, std::size_t i) {
  return {t.order(i), t.centralizer_size(i)};
}

// Closure of a set of generators as a membership mask.
std::vector<bool> closure(const CayleyTable& t, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(t.size(), false);
  std::vector<std::size_t> queue{0};
  in[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t g : gens) {
      std::size_t x = t.mul(queue[k], g);
      if (!in[x]) {
        in[x] = true;
        queue.push_back(x);
      }
    }
  return in;
}

}  // namespace

bool for_each_isomorphism(const PermGroup& g, const PermGroup& h,
                          const std::function<bool(const GroupHom&)>& visit,
                          std::uint64_t bound) {
  if (g.order() != h.order()) return false;
  if (g.order() > bound)
    throw SearchBoundExceeded("isomorphism search is limited to order " +
                              std::to_string(bound) + ", got " +
                              std::to_string(g.order()));
  if (fingerprint(g) != fingerprint(h)) return false;

  CayleyTable tg(g, bound), th(h, bound);
  std::map<ClassKey, std::vector<std::size_t>> h_classes;
  std::map<ClassKey, std::size_t> g_class_sizes;
  for (std::size_t i = 0; i < th.size(); ++i) h_classes[key_of(th, i)].push_back(i);
  for (std::size_t i = 0; i < tg.size(); ++i) ++g_class_sizes[key_of(tg, i)];
  for (const auto& [key, count] : g_class_sizes) {
    auto it = h_classes.find(key);
    if (it == h_classes.end() || it->second.size() != count) return false;
  }

  // Generators chosen greedily: fewest candidate images first, then
  // largest element order.
  std::vector<std::size_t> order(tg.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    std::size_t ca = g_class_sizes[key_of(tg, a)], cb = g_class_sizes[key_of(tg, b)];
    if (ca != cb) return ca < cb;
    return tg.order(a) > tg.order(b);
  });
  std::vector<std::size_t> gens;
  std::vector<bool> covered = closure(tg, gens);
  for (std::size_t i : order) {
    if (covered[i]) continue;
    gens.push_back(i);
    covered = closure(tg, gens);
  }

  std::vector<std::vector<std::size_t>> candidates;
  for (std::size_t x : gens) {
    std::vector<std::size_t> c = h_classes[key_of(tg, x)];
    // Try the element itself first when both groups share a domain.
    if (auto same = th.elements().find(tg.elements()[x])) {
      auto it = std::find(c.begin(), c.end(), *same);
      if (it != c.end()) std::rotate(c.begin(), it, it + 1);
    }
    candidates.push_back(std::move(c));
  }

  std::vector<std::size_t> images;
  std::vector<std::size_t> prefix_gens;
  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == gens.size()) {
      auto map = extend_injective(tg, th, gens, images);
      std::vector<Permutation> gen_images;
      for (const auto& s : g.generators())
        gen_images.push_back(th.elements()[(*map)[tg.elements().index_of(s)]]);
      return visit(GroupHom(g, h, std::move(gen_images)));
    }
    prefix_gens.push_back(gens[depth]);
    for (std::size_t y : candidates[depth]) {
      images.push_back(y);
      if (extend_injective(tg, th, prefix_gens, images) && search(depth + 1))
        return true;
      images.pop_back();
    }
    prefix_gens.pop_back();
    return false;
  };
  return search(0);
}

std::optional<GroupHom> isomorphic(const PermGroup& g, const PermGroup& h,
                                   std::uint64_t bound) {
  std::optional<GroupHom> found;
  for_each_isomorphism(
      g, h,
      [&](const GroupHom& iso) {
        found = iso;
        return true;
      },
      bound);
  return found;
}

}  // namespace xmodlab
