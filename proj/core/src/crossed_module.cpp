#include "xmodlab/crossed_module.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "xmodlab/errors.hpp"
#include "xmodlab/group_ops.hpp"
#include "xmodlab/isomorphism.hpp"

namespace xmodlab {

CrossedModule::CrossedModule(GroupHom boundary, std::vector<GroupHom> action)
    : boundary_(std::move(boundary)), action_(std::move(action)) {
  const PermGroup& m = source();
  const PermGroup& q = range();
  if (action_.size() != q.generators().size())
    throw InvalidAction("need one automorphism per generator of Q: got " +
                        std::to_string(action_.size()) + ", expected " +
                        std::to_string(q.generators().size()));
  if (m.order() * q.order() > kActionTableLimit)
    throw BoundExceeded("|M|*|Q| = " + std::to_string(m.order() * q.order()) +
                        " exceeds the action table limit");
  for (const auto& a : action_) {
    if (!(a.source() == m) || !(a.target() == m))
      throw InvalidAction("action maps must be endomorphisms of M");
    if (a.image().order() != m.order())
      throw InvalidAction("action maps must be automorphisms of M");
  }

  auto tables = std::make_shared<Tables>(Tables{ElementTable(m), ElementTable(q), {}, {}});
  const ElementTable& mt = tables->m;
  const ElementTable& qt = tables->q;
  const std::size_t nm = mt.size();

  tables->boundary.resize(nm);
  for (std::size_t i = 0; i < nm; ++i)
    tables->boundary[i] = qt.index_of(boundary_(mt[i]));

  // Generator automorphisms as index maps on M.
  std::vector<std::vector<std::size_t>> gen_maps(action_.size());
  for (std::size_t g = 0; g < action_.size(); ++g) {
    gen_maps[g].resize(nm);
    for (std::size_t i = 0; i < nm; ++i) gen_maps[g][i] = mt.index_of(action_[g](mt[i]));
  }

  // Extend along the Cayley graph of Q: m^(q g) = (m^q)^g.
  auto& act = tables->action;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  act.assign(qt.size() * nm, unset);
  for (std::size_t i = 0; i < nm; ++i) act[i] = i;
  for (std::size_t qi : qt.bfs_order()) {
    for (std::size_t g = 0; g < qt.generator_count(); ++g) {
      std::size_t qj = qt.right_mult(qi, g);
      bool fresh = act[qj * nm] == unset;
      for (std::size_t i = 0; i < nm; ++i) {
        std::size_t image = gen_maps[g][act[qi * nm + i]];
        if (fresh) {
          act[qj * nm + i] = image;
        } else if (act[qj * nm + i] != image) {
          throw InvalidAction("generator automorphisms do not define an action of Q: " +
                              qt[qj].to_string() + " acts in two ways");
        }
      }
    }
  }
  tables_ = std::move(tables);
}

Permutation CrossedModule::boundary_of(const Permutation& m) const {
  return range_elements()[boundary_index(source_elements().index_of(m))];
}

Permutation CrossedModule::act(const Permutation& m, const Permutation& q) const {
  return source_elements()[act_index(source_elements().index_of(m),
                                     range_elements().index_of(q))];
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << "CM1 " << (cm1 ? "ok" : "FAILED");
  if (cm1_witness) os << " (m=" << cm1_witness->first << ", q=" << cm1_witness->second << ")";
  os << ", CM2 " << (cm2 ? "ok" : "FAILED");
  if (cm2_witness) os << " (m=" << cm2_witness->first << ", m'=" << cm2_witness->second << ")";
  if (!kernel_central) os << ", kernel not central";
  if (!image_normal) os << ", image not normal";
  return os.str();
}

ValidationReport validate(const CrossedModule& x) {
  ValidationReport report;
  const ElementTable& mt = x.source_elements();
  const ElementTable& qt = x.range_elements();

  for (std::size_t qi = 0; qi < qt.size() && report.cm1; ++qi) {
    Permutation q_inv = qt[qi].inverse();
    for (std::size_t mi = 0; mi < mt.size(); ++mi) {
      const Permutation& lhs = qt[x.boundary_index(x.act_index(mi, qi))];
      if (lhs != q_inv * qt[x.boundary_index(mi)] * qt[qi]) {
        report.cm1 = false;
        report.cm1_witness.emplace(mt[mi], qt[qi]);
        break;
      }
    }
  }

  for (std::size_t b = 0; b < mt.size() && report.cm2; ++b) {
    Permutation b_inv = mt[b].inverse();
    std::size_t db = x.boundary_index(b);
    for (std::size_t a = 0; a < mt.size(); ++a) {
      if (mt[x.act_index(a, db)] != b_inv * mt[a] * mt[b]) {
        report.cm2 = false;
        report.cm2_witness.emplace(mt[a], mt[b]);
        break;
      }
    }
  }

  // Ker d central in M.
  for (std::size_t k = 0; k < mt.size() && report.kernel_central; ++k) {
    if (!qt[x.boundary_index(k)].is_identity()) continue;
    for (const auto& g : x.source().generators())
      if (mt[k] * g != g * mt[k]) {
        report.kernel_central = false;
        break;
      }
  }

  // d(M) normal in Q.
  std::vector<bool> in_image(qt.size(), false);
  for (std::size_t i = 0; i < mt.size(); ++i) in_image[x.boundary_index(i)] = true;
  for (std::size_t qi = 0; qi < qt.size() && report.image_normal; ++qi) {
    if (!in_image[qi]) continue;
    for (const auto& g : x.range().generators())
      if (!in_image[qt.index_of(qt[qi].conjugate(g))]) {
        report.image_normal = false;
        break;
      }
  }
  return report;
}

GroupHom conjugation_automorphism(const PermGroup& m, const Permutation& g) {
  std::vector<Permutation> images;
  images.reserve(m.generators().size());
  for (const auto& x : m.generators()) images.push_back(x.conjugate(g));
  return GroupHom(m, m, std::move(images));
}

CrossedModule identity_xmod(const PermGroup& p) {
  std::vector<GroupHom> action;
  for (const auto& g : p.generators()) action.push_back(conjugation_automorphism(p, g));
  return CrossedModule(GroupHom::identity(p), std::move(action));
}

CrossedModule normal_inclusion_xmod(const PermGroup& n, const PermGroup& q) {
  if (!is_subgroup(n, q)) throw NotSubgroup("N is not a subgroup of Q");
  if (!n.is_normalized_by(q)) throw NotNormal("N is not normal in Q");
  std::vector<GroupHom> action;
  for (const auto& g : q.generators()) action.push_back(conjugation_automorphism(n, g));
  return CrossedModule(GroupHom::inclusion(n, q), std::move(action));
}

PermGroup pi1(const CrossedModule& x) {
  ValidationReport report = validate(x);
  if (!report.ok()) throw ValidationFailed("pi1 of an invalid crossed module: " + report.summary());
  return quotient(x.range(), x.boundary().image()).group;
}

Pi2 pi2(const CrossedModule& x) {
  ValidationReport report = validate(x);
  if (!report.ok()) throw ValidationFailed("pi2 of an invalid crossed module: " + report.summary());
  PermGroup kernel = x.boundary().kernel();
  std::vector<std::int64_t> invariants = abelian_invariants(kernel);
  return Pi2{std::move(kernel), std::move(invariants)};
}

bool is_morphism(const CrossedModule& x, const CrossedModule& y, const XModMorphism& phi) {
  const ElementTable& mt = x.source_elements();
  const ElementTable& qt = x.range_elements();
  if (!(phi.source_map.source() == x.source()) || !(phi.range_map.source() == x.range()) ||
      !(phi.source_map.target() == y.source()) || !(phi.range_map.target() == y.range()))
    return false;
  std::vector<Permutation> f(mt.size()), g(qt.size());
  for (std::size_t i = 0; i < mt.size(); ++i) f[i] = phi.source_map(mt[i]);
  for (std::size_t i = 0; i < qt.size(); ++i) g[i] = phi.range_map(qt[i]);
  for (std::size_t i = 0; i < mt.size(); ++i)
    if (y.boundary_of(f[i]) != g[x.boundary_index(i)]) return false;
  for (std::size_t qi = 0; qi < qt.size(); ++qi)
    for (std::size_t mi = 0; mi < mt.size(); ++mi)
      if (f[x.act_index(mi, qi)] != y.act(f[mi], g[qi])) return false;
  return true;
}

std::optional<XModMorphism> xmod_isomorphic(const CrossedModule& x, const CrossedModule& y,
                                            std::uint64_t bound) {
  const PermGroup& m = x.source();
  const PermGroup& mp = y.source();
  if (m.order() != mp.order() || x.range().order() != y.range().order()) return std::nullopt;
  if (std::max(m.order(), x.range().order()) > bound)
    throw SearchBoundExceeded("crossed module isomorphism search is limited to order " +
                              std::to_string(bound));
  if (x.boundary().image().order() != y.boundary().image().order()) return std::nullopt;

  CayleyTable tm(m, bound), tmp(mp, bound);
  const ElementTable& qx = x.range_elements();
  const ElementTable& qy = y.range_elements();

  // Elements generating M as a Q-group, chosen greedily by element order.
  auto orbit_of = [&](std::size_t u) {
    std::vector<std::size_t> orbit;
    for (std::size_t q = 0; q < qx.size(); ++q) orbit.push_back(x.act_index(u, q));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
  };
  auto closure_of = [&](const std::vector<std::size_t>& gens) {
    std::vector<bool> in(tm.size(), false);
    std::vector<std::size_t> queue{0};
    in[0] = true;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (std::size_t s : gens) {
        std::size_t z = tm.mul(queue[k], s);
        if (!in[z]) {
          in[z] = true;
          queue.push_back(z);
        }
      }
    return in;
  };
  std::vector<std::size_t> by_order(tm.size());
  for (std::size_t i = 0; i < by_order.size(); ++i) by_order[i] = i;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](std::size_t a, std::size_t b) { return tm.order(a) > tm.order(b); });
  std::vector<std::size_t> module_gens, closure_gens;
  std::vector<bool> covered = closure_of(closure_gens);
  for (std::size_t u : by_order) {
    if (covered[u]) continue;
    module_gens.push_back(u);
    for (std::size_t v : orbit_of(u)) closure_gens.push_back(v);
    covered = closure_of(closure_gens);
  }

  std::optional<XModMorphism> found;
  for_each_isomorphism(
      x.range(), y.range(),
      [&](const GroupHom& g) {
        std::vector<std::size_t> g_index(qx.size());
        for (std::size_t q = 0; q < qx.size(); ++q) g_index[q] = qy.index_of(g(qx[q]));

        std::vector<std::vector<std::size_t>> candidates;
        for (std::size_t u : module_gens) {
          std::size_t target_boundary = g_index[x.boundary_index(u)];
          std::vector<std::size_t> c;
          std::optional<std::size_t> same = tmp.elements().find(tm.elements()[u]);
          for (std::size_t v = 0; v < tmp.size(); ++v) {
            if (y.boundary_index(v) != target_boundary) continue;
            if (tmp.order(v) != tm.order(u) || tmp.centralizer_size(v) != tm.centralizer_size(u))
              continue;
            if (same && v == *same)
              c.insert(c.begin(), v);
            else
              c.push_back(v);
          }
          if (c.empty()) return false;
          candidates.push_back(std::move(c));
        }

        std::vector<std::size_t> gens, images;
        std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
          if (depth == module_gens.size()) {
            auto map = extend_injective(tm, tmp, gens, images);
            std::vector<Permutation> f_images;
            for (const auto& s : m.generators())
              f_images.push_back(tmp.elements()[(*map)[tm.elements().index_of(s)]]);
            XModMorphism phi{GroupHom(m, mp, std::move(f_images)), g};
            if (!is_morphism(x, y, phi)) return false;
            found.emplace(std::move(phi));
            return true;
          }
          std::size_t u = module_gens[depth];
          for (std::size_t v : candidates[depth]) {
            std::size_t before = gens.size();
            for (std::size_t q = 0; q < qx.size(); ++q) {
              gens.push_back(x.act_index(u, q));
              images.push_back(y.act_index(v, g_index[q]));
            }
            if (extend_injective(tm, tmp, gens, images) && search(depth + 1)) return true;
            gens.resize(before);
            images.resize(before);
          }
          return false;
        };
        return search(0);
      },
      bound);
  return found;
}

namespace {

nlohmann::ordered_json group_json(const PermGroup& g) {
  nlohmann::ordered_json j;
  j["degree"] = g.degree();
  auto gens = nlohmann::ordered_json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_string());
  j["generators"] = std::move(gens);
  return j;
}

PermGroup group_from_json(const nlohmann::json& j) {
  std::size_t degree = j.at("degree").get<std::size_t>();
  std::vector<Permutation> gens;
  for (const auto& s : j.at("generators")) gens.push_back(parse_permutation(s.get<std::string>(), degree));
  return PermGroup(degree, std::move(gens));
}

std::vector<Permutation> perms_from_json(const nlohmann::json& j, std::size_t degree) {
  std::vector<Permutation> perms;
  for (const auto& s : j) perms.push_back(parse_permutation(s.get<std::string>(), degree));
  return perms;
}

}  // namespace

nlohmann::ordered_json to_json(const CrossedModule& x) {
  nlohmann::ordered_json j;
  j["M"] = group_json(x.source());
  j["Q"] = group_json(x.range());
  auto boundary = nlohmann::ordered_json::array();
  for (const auto& p : x.boundary().generator_images()) boundary.push_back(p.to_string());
  j["boundary"] = std::move(boundary);
  auto action = nlohmann::ordered_json::array();
  for (const auto& a : x.action()) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& p : a.generator_images()) row.push_back(p.to_string());
    action.push_back(std::move(row));
  }
  j["action"] = std::move(action);
  return j;
}

CrossedModule crossed_module_from_json(const nlohmann::json& j) {
  try {
    PermGroup m = group_from_json(j.at("M"));
    PermGroup q = group_from_json(j.at("Q"));
    GroupHom boundary(m, q, perms_from_json(j.at("boundary"), q.degree()));
    std::vector<GroupHom> action;
    for (const auto& row : j.at("action"))
      action.emplace_back(m, m, perms_from_json(row, m.degree()));
    return CrossedModule(std::move(boundary), std::move(action));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("crossed module JSON: ") + e.what(), 0);
  }
}

}  // namespace xmodlab
