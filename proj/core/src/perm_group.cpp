#include "xmodlab/perm_group.hpp"

#include <ostream>
#include <set>

#include "xmodlab/errors.hpp"

namespace xmodlab {

namespace {

void extend_orbit(PermGroup::Level& level) {
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point p = level.orbit[k];
    for (const auto& x : level.strong_generators) {
      Point q = x[p];
      if (!level.transversal[q]) {
        level.transversal[q] = *level.transversal[p] * x;
        level.orbit.push_back(q);
      }
    }
  }
}

PermGroup::Level make_level(Point base, std::size_t degree) {
  PermGroup::Level level;
  level.base_point = base;
  level.transversal.resize(degree);
  level.transversal[base] = Permutation(degree);
  level.orbit.push_back(base);
  return level;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : PermGroup(degree, std::move(generators), {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     const std::vector<Point>& base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ == 0) throw DegreeMismatch("permutation groups need degree >= 1");
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw DegreeMismatch("generator " + g.to_string() + " has degree " +
                           std::to_string(g.degree()) + ", expected " +
                           std::to_string(degree_));
  build_chain(base_prefix);
}

void PermGroup::build_chain(const std::vector<Point>& base_prefix) {
  for (Point b : base_prefix) {
    if (b >= degree_) throw DegreeMismatch("base point outside the domain");
    chain_.push_back(make_level(b, degree_));
  }

  // Adds h to levels [from, to], creating level `to` if it does not exist.
  auto add_strong = [this](std::size_t from, std::size_t to,
                           const Permutation& h) {
    if (to == chain_.size()) chain_.push_back(make_level(h.first_moved_point(), degree_));
    for (std::size_t l = from; l <= to; ++l) {
      chain_[l].strong_generators.push_back(h);
      extend_orbit(chain_[l]);
    }
  };

  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    std::size_t j = 0;
    while (j < chain_.size() && g[chain_[j].base_point] == chain_[j].base_point)
      ++j;
    add_strong(0, j, g);
  }

  // Schreier generators already known to sift, per level.
  std::vector<std::set<std::pair<Point, std::size_t>>> checked;
  long i = static_cast<long>(chain_.size()) - 1;
  while (i >= 0) {
    checked.resize(chain_.size());
    auto& level = chain_[static_cast<std::size_t>(i)];
    bool extended = false;
    for (std::size_t k = 0; k < level.orbit.size() && !extended; ++k) {
      Point p = level.orbit[k];
      for (std::size_t gi = 0; gi < level.strong_generators.size(); ++gi) {
        if (!checked[static_cast<std::size_t>(i)].insert({p, gi}).second)
          continue;
        const Permutation& x = level.strong_generators[gi];
        Permutation schreier =
            *level.transversal[p] * x * level.transversal[x[p]]->inverse();
        auto [residue, j] = sift(schreier, static_cast<std::size_t>(i) + 1);
        if (!residue.is_identity()) {
          add_strong(static_cast<std::size_t>(i) + 1, j, residue);
          i = static_cast<long>(j);
          extended = true;
          break;
        }
      }
    }
    if (!extended) --i;
  }

  order_ = 1;
  for (const auto& level : chain_) {
    std::uint64_t size = level.orbit.size();
    if (order_ > UINT64_MAX / size)
      throw BoundExceeded("group order overflows 64 bits");
    order_ *= size;
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(const Permutation& p,
                                                    std::size_t from_level) const {
  Permutation g = p;
  for (std::size_t l = from_level; l < chain_.size(); ++l) {
    const auto& level = chain_[l];
    Point image = g[level.base_point];
    if (!level.transversal[image]) return {g, l};
    g *= level.transversal[image]->inverse();
  }
  return {g, chain_.size()};
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift(p).first.is_identity();
}

bool PermGroup::contains_all(const std::vector<Permutation>& perms) const {
  for (const auto& p : perms)
    if (!contains(p)) return false;
  return true;
}

bool PermGroup::contains_group(const PermGroup& other) const {
  return other.degree_ == degree_ && contains_all(other.generators_);
}

bool PermGroup::is_abelian() const {
  for (std::size_t a = 0; a < generators_.size(); ++a)
    for (std::size_t b = a + 1; b < generators_.size(); ++b)
      if (generators_[a] * generators_[b] != generators_[b] * generators_[a])
        return false;
  return true;
}

bool PermGroup::is_normalized_by(const PermGroup& overgroup) const {
  for (const auto& n : generators_)
    for (const auto& g : overgroup.generators())
      if (!contains(n.conjugate(g))) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const PermGroup& g) {
  return os << "<" << to_string(g.generators()) << ">";
}

}  // namespace xmodlab
