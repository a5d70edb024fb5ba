#include "xmodlab/group_ops.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "xmodlab/element_table.hpp"
#include "xmodlab/errors.hpp"
#include "xmodlab/smith.hpp"

namespace xmodlab {

PermGroup group_from_generators(std::vector<Permutation> gens, std::size_t degree) {
  return PermGroup(degree, std::move(gens));
}

PermGroup generate_subgroup(std::size_t degree,
                            const std::vector<Permutation>& candidates) {
  PermGroup current(degree, {});
  std::vector<Permutation> gens;
  for (const auto& c : candidates) {
    if (c.degree() != degree)
      throw DegreeMismatch("candidate " + c.to_string() + " has the wrong degree");
    if (current.contains(c)) continue;
    gens.push_back(c);
    current = PermGroup(degree, gens);
  }
  return current;
}

bool is_subgroup(const PermGroup& sub, const PermGroup& group) {
  return group.contains_group(sub);
}

bool is_normal(const PermGroup& sub, const PermGroup& group) {
  return is_subgroup(sub, group) && sub.is_normalized_by(group);
}

PermGroup normal_closure(const PermGroup& group,
                         const std::vector<Permutation>& elements) {
  for (const auto& e : elements)
    if (!group.contains(e))
      throw NotSubgroup(e.to_string() + " is not in the group");
  PermGroup closure = generate_subgroup(group.degree(), elements);
  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<Permutation> gens = closure.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (const auto& g : group.generators()) {
        Permutation c = gens[i].conjugate(g);
        if (!closure.contains(c)) {
          gens.push_back(std::move(c));
          closure = PermGroup(group.degree(), gens);
          grown = true;
        }
      }
    }
  }
  return closure;
}

Quotient quotient(const PermGroup& group, const PermGroup& normal) {
  if (!is_subgroup(normal, group))
    throw NotSubgroup("quotient by a subgroup that is not contained in the group");
  if (!normal.is_normalized_by(group))
    throw NotNormal("quotient by a subgroup that is not normal");

  ElementTable n_elems(normal);
  auto canonical = [&](const Permutation& x) {
    Permutation best = n_elems[0] * x;
    for (std::size_t i = 1; i < n_elems.size(); ++i) {
      Permutation y = n_elems[i] * x;
      if (y < best) best = std::move(y);
    }
    return best;
  };

  std::vector<Permutation> reps{group.identity()};
  std::unordered_map<Permutation, std::size_t> index{{group.identity(), 0}};
  for (std::size_t k = 0; k < reps.size(); ++k)
    for (const auto& g : group.generators()) {
      Permutation c = canonical(reps[k] * g);
      if (index.emplace(c, reps.size()).second) reps.push_back(std::move(c));
    }
  std::sort(reps.begin(), reps.end());
  for (std::size_t i = 0; i < reps.size(); ++i) index[reps[i]] = i;

  std::vector<Permutation> images;
  for (const auto& g : group.generators()) {
    std::vector<Point> action(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
      action[i] = static_cast<Point>(index.at(canonical(reps[i] * g)));
    images.push_back(Permutation::from_images(std::move(action)));
  }
  PermGroup q(reps.size(), images);
  GroupHom projection(group, q, std::move(images));
  return Quotient{std::move(q), std::move(projection), std::move(reps)};
}

PermGroup derived_subgroup(const PermGroup& group) {
  std::vector<Permutation> commutators;
  const auto& gens = group.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      commutators.push_back(gens[a].inverse() * gens[b].inverse() * gens[a] * gens[b]);
  return normal_closure(group, commutators);
}

PermGroup center(const PermGroup& group) {
  ElementTable t(group);
  std::vector<Permutation> central;
  for (const auto& x : t.elements()) {
    bool commutes = true;
    for (const auto& g : group.generators())
      if (x * g != g * x) {
        commutes = false;
        break;
      }
    if (commutes) central.push_back(x);
  }
  return generate_subgroup(group.degree(), central);
}

std::vector<std::int64_t> abelian_invariants(const PermGroup& group) {
  if (!group.is_abelian()) throw NonAbelian("abelian invariants of a nonabelian group");
  if (group.is_trivial()) return {};

  // Relation lattice of the generators: the exponent vectors that evaluate
  // to the identity. A spanning tree of the Cayley graph gives a generating
  // set, and |G| times each unit vector is always a relation.
  ElementTable t(group);
  const std::size_t k = t.generator_count();
  const auto n = static_cast<std::int64_t>(group.order());
  std::vector<std::vector<std::int64_t>> coords(t.size());
  coords[0].assign(k, 0);
  for (std::size_t idx : t.bfs_order()) {
    if (idx == 0) continue;
    coords[idx] = coords[t.parent(idx)];
    coords[idx][t.parent_generator(idx)] += 1;
  }
  IntMatrix relations;
  for (std::size_t g = 0; g < k; ++g) {
    std::vector<std::int64_t> row(k, 0);
    row[g] = n;
    relations.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t g = 0; g < k; ++g) {
      std::size_t j = t.right_mult(i, g);
      std::vector<std::int64_t> row(k);
      bool zero = true;
      for (std::size_t c = 0; c < k; ++c) {
        row[c] = coords[i][c] + (c == g ? 1 : 0) - coords[j][c];
        zero = zero && row[c] == 0;
      }
      if (!zero) relations.push_back(std::move(row));
    }

  std::vector<std::int64_t> invariants =
      smith_normal_form(hermite_basis(relations, k));
  std::vector<std::int64_t> result;
  for (auto d : invariants)
    if (d != 1) result.push_back(d);
  return result;
}

std::vector<std::int64_t> abelianization_invariants(const PermGroup& group) {
  return abelian_invariants(quotient(group, derived_subgroup(group)).group);
}

Fingerprint fingerprint(const PermGroup& group) {
  ElementTable t(group);
  Fingerprint fp;
  fp.order = group.order();
  for (const auto& x : t.elements()) ++fp.element_orders[x.order()];
  fp.center_order = center(group).order();
  PermGroup derived = derived_subgroup(group);
  fp.derived_order = derived.order();
  fp.abelianization = abelian_invariants(quotient(group, derived).group);
  return fp;
}

std::string cyclic_product_name(const std::vector<std::int64_t>& invariants) {
  if (invariants.empty()) return "1";
  std::vector<std::int64_t> sorted = invariants;
  // free factors first, then descending
  std::sort(sorted.begin(), sorted.end(), [](std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return a == 0 && b != 0;
    return a > b;
  });
  std::ostringstream os;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (i) os << " x ";
    if (sorted[i] == 0)
      os << "Z";
    else
      os << "C" << sorted[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

PermGroup trivial_group() { return PermGroup(1, {}); }

PermGroup cyclic(std::size_t n) {
  if (n == 0) throw DegreeMismatch("cyclic(0)");
  std::vector<Point> cycle(n);
  for (Point i = 0; i < n; ++i) cycle[i] = i + 1;
  if (n == 1) return trivial_group();
  return PermGroup(n, {Permutation::from_cycles(n, {cycle})});
}

PermGroup symmetric(std::size_t n) {
  if (n == 0) throw DegreeMismatch("symmetric(0)");
  if (n == 1) return trivial_group();
  std::vector<Point> cycle(n);
  for (Point i = 0; i < n; ++i) cycle[i] = i + 1;
  return PermGroup(n, {Permutation::from_cycles(n, {{1, 2}}),
                       Permutation::from_cycles(n, {cycle})});
}

PermGroup alternating(std::size_t n) {
  if (n == 0) throw DegreeMismatch("alternating(0)");
  if (n < 3) return PermGroup(n, {});
  std::vector<Permutation> gens;
  for (Point k = 3; k <= n; ++k) gens.push_back(Permutation::from_cycles(n, {{1, 2, k}}));
  return PermGroup(n, std::move(gens));
}

PermGroup dihedral(std::size_t order) {
  if (order == 0 || order % 2 != 0)
    throw DegreeMismatch("dihedral groups have even order");
  if (order == 2) return cyclic(2);
  if (order == 4)
    return PermGroup(4, {Permutation::from_cycles(4, {{1, 2}}),
                         Permutation::from_cycles(4, {{3, 4}})});
  const std::size_t n = order / 2;
  std::vector<Point> cycle(n);
  for (Point i = 0; i < n; ++i) cycle[i] = i + 1;
  std::vector<std::vector<Point>> reflection;
  for (Point i = 2; i < n + 2 - i; ++i) reflection.push_back({i, static_cast<Point>(n + 2 - i)});
  return PermGroup(n, {Permutation::from_cycles(n, {cycle}),
                       Permutation::from_cycles(n, reflection)});
}

namespace {

using Mat2 = std::array<int, 4>;  // row-major over F_3

// Nonzero vectors of F_3^2 in lexicographic order; index = point.
std::vector<std::array<int, 2>> plane_points() {
  std::vector<std::array<int, 2>> pts;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) pts.push_back({a, b});
  return pts;
}

Permutation matrix_action(const Mat2& m) {
  auto pts = plane_points();
  std::vector<Point> images(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    // row vector times matrix
    int x = (pts[i][0] * m[0] + pts[i][1] * m[2]) % 3;
    int y = (pts[i][0] * m[1] + pts[i][1] * m[3]) % 3;
    images[i] = static_cast<Point>(
        std::find(pts.begin(), pts.end(), std::array<int, 2>{x, y}) - pts.begin());
  }
  return Permutation::from_images(std::move(images));
}

const std::array<Mat2, 3> kGlGenerators = {Mat2{1, 1, 0, 1}, Mat2{1, 0, 1, 1},
                                           Mat2{2, 0, 0, 1}};

}  // namespace

PermGroup gl23() {
  std::vector<Permutation> gens;
  for (const auto& m : kGlGenerators) gens.push_back(matrix_action(m));
  return PermGroup(8, std::move(gens));
}

PermGroup sl23() {
  PermGroup gl = gl23();
  PermGroup units = cyclic(2);
  std::vector<Permutation> dets;
  for (const auto& m : kGlGenerators) {
    int det = ((m[0] * m[3] - m[1] * m[2]) % 3 + 3) % 3;
    dets.push_back(det == 1 ? units.identity() : units.generators()[0]);
  }
  return GroupHom(gl, units, std::move(dets)).kernel();
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(g.extended(n));
  for (const auto& g : b.generators())
    gens.push_back(g.shifted(static_cast<Point>(a.degree()), n));
  return PermGroup(n, std::move(gens));
}

}  // namespace xmodlab
