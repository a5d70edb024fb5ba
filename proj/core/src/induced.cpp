#include "xmodlab/induced.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>
#include <thread>

#include "xmodlab/errors.hpp"
#include "xmodlab/isomorphism.hpp"

namespace xmodlab {

namespace {

// Coset number of every element of Q, cosets numbered by their least element.
std::vector<std::size_t> coset_numbers(const ElementTable& qt, const PermGroup& h,
                                       std::size_t& count) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  ElementTable ht(h);
  std::vector<std::size_t> coset(qt.size(), unset);
  count = 0;
  for (std::size_t q = 0; q < qt.size(); ++q) {
    if (coset[q] != unset) continue;
    for (const auto& x : ht.elements()) coset[qt.index_of(x * qt[q])] = count;
    ++count;
  }
  return coset;
}

}  // namespace

std::vector<Permutation> coset_transversal(const PermGroup& q, const PermGroup& h) {
  if (!is_subgroup(h, q)) throw NotSubgroup("H is not a subgroup of Q");
  ElementTable qt(q);
  std::size_t count = 0;
  std::vector<std::size_t> coset = coset_numbers(qt, h, count);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < qt.size(); ++i)
    if (coset[i] == reps.size()) reps.push_back(qt[i]);
  return reps;
}

std::vector<Permutation> random_transversal(const PermGroup& q, const PermGroup& h,
                                            std::mt19937& rng) {
  if (!is_subgroup(h, q)) throw NotSubgroup("H is not a subgroup of Q");
  ElementTable qt(q);
  std::size_t count = 0;
  std::vector<std::size_t> coset = coset_numbers(qt, h, count);
  std::vector<std::vector<std::size_t>> members(count);
  for (std::size_t i = 0; i < qt.size(); ++i) members[coset[i]].push_back(i);
  std::vector<Permutation> reps;
  for (const auto& m : members) {
    std::uniform_int_distribution<std::size_t> pick(0, m.size() - 1);
    reps.push_back(qt[m[pick(rng)]]);
  }
  return reps;
}

namespace {

using RelatorKey = std::vector<std::uint32_t>;

RelatorKey key_of(const Word& w) {
  RelatorKey k;
  for (const auto& l : w.letters()) k.push_back(l.column());
  return k;
}

Permutation evaluate(const Word& w, const std::vector<Permutation>& images,
                     const Permutation& identity) {
  Permutation r = identity;
  for (const auto& l : w.letters())
    r *= l.exponent > 0 ? images[l.generator] : images[l.generator].inverse();
  return r;
}

// Adds Peiffer relators for every generator pair, given the boundary of each
// generator (as an index into `qt`) and a callback giving y^q as an index.
template <typename Act>
void add_peiffer(std::vector<Word>& relators, std::set<RelatorKey>& seen,
                 const std::vector<std::size_t>& boundary, Act act) {
  const auto n = static_cast<std::uint32_t>(boundary.size());
  for (std::uint32_t x = 0; x < n; ++x) {
    Word wx = Word::generator(x);
    for (std::uint32_t y = 0; y < n; ++y) {
      Word r = wx.inverse() * Word::generator(y) * wx *
               Word::generator(static_cast<std::uint32_t>(act(y, boundary[x])), -1);
      if (!r.empty() && seen.insert(key_of(r)).second) relators.push_back(std::move(r));
    }
  }
}

void check_relators(const InducedPresentation& ip) {
  const Permutation identity = ip.range.identity();
  for (const auto& r : ip.presentation.relators())
    if (!evaluate(r, ip.boundary, identity).is_identity())
      throw ValidationFailed("relator " + ip.presentation.format_word(r) +
                             " does not die under the boundary");
}

}  // namespace

InducedPresentation induced_presentation(const CrossedModule& x, const GroupHom& iota,
                                         std::vector<Permutation> transversal) {
  if (!(iota.source() == x.range()))
    throw DegreeMismatch("the inclusion must start at the range of the crossed module");
  if (!iota.is_injective()) throw NonInjective("induction needs an injective map P -> Q");

  const PermGroup& q = iota.target();
  const PermGroup h = iota.image();
  const ElementTable& mt = x.source_elements();
  const ElementTable& pt = x.range_elements();
  ElementTable qt(q);

  std::size_t index = 0;
  std::vector<std::size_t> coset = coset_numbers(qt, h, index);
  if (mt.size() * index > kGeneratorBudget)
    throw BoundExceeded("induced presentation would need " +
                        std::to_string(mt.size() * index) + " generators");
  if (transversal.empty()) transversal = coset_transversal(q, h);
  if (transversal.size() != index)
    throw NotSubgroup("transversal has the wrong number of elements");
  std::vector<std::size_t> rep_of(index, index);
  for (std::size_t i = 0; i < transversal.size(); ++i) {
    std::size_t c = coset[qt.index_of(transversal[i])];
    if (rep_of[c] != index) throw NotSubgroup("transversal meets a coset twice");
    rep_of[c] = i;
  }

  // Element of Q (by index) in the image of P -> element of P (by index).
  std::vector<std::size_t> preimage(qt.size(), pt.size());
  for (std::size_t i = 0; i < pt.size(); ++i) preimage[qt.index_of(iota(pt[i]))] = i;

  const std::size_t nm = mt.size();
  const std::size_t n = nm * index;
  std::vector<Permutation> t_inverse(index);
  for (std::size_t i = 0; i < index; ++i) t_inverse[i] = transversal[i].inverse();

  // (m, t)^q = (m^p, t') with t q = p t'.
  std::vector<std::size_t> act_cache(n * qt.size(), n);
  auto act = [&](std::size_t gen, std::size_t qi) {
    std::size_t& slot = act_cache[qi * n + gen];
    if (slot != n) return slot;
    std::size_t mi = gen % nm, ti = gen / nm;
    Permutation tq = transversal[ti] * qt[qi];
    std::size_t tj = rep_of[coset[qt.index_of(tq)]];
    std::size_t p = preimage[qt.index_of(tq * t_inverse[tj])];
    slot = tj * nm + x.act_index(mi, p);
    return slot;
  };

  std::vector<Permutation> boundary(n);
  std::vector<std::size_t> boundary_index(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t mi = g % nm, ti = g / nm;
    boundary[g] = iota(pt[x.boundary_index(mi)]).conjugate(transversal[ti]);
    boundary_index[g] = qt.index_of(boundary[g]);
  }

  std::vector<Word> relators;
  std::set<RelatorKey> seen;
  for (std::size_t ti = 0; ti < index; ++ti)
    for (std::size_t a = 0; a < nm; ++a)
      for (std::size_t b = 0; b < nm; ++b) {
        std::size_t ab = mt.index_of(mt[a] * mt[b]);
        Word r = Word::generator(static_cast<std::uint32_t>(ti * nm + a)) *
                 Word::generator(static_cast<std::uint32_t>(ti * nm + b)) *
                 Word::generator(static_cast<std::uint32_t>(ti * nm + ab), -1);
        if (!r.empty() && seen.insert(key_of(r)).second) relators.push_back(std::move(r));
      }
  add_peiffer(relators, seen, boundary_index, act);

  std::vector<std::vector<std::uint32_t>> action;
  for (const auto& g : q.generators()) {
    std::size_t qi = qt.index_of(g);
    std::vector<std::uint32_t> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<std::uint32_t>(act(i, qi));
    action.push_back(std::move(row));
  }

  InducedPresentation ip{Presentation(n, std::move(relators)),
                         q,
                         std::move(transversal),
                         mt.elements(),
                         std::move(boundary),
                         std::move(action)};
  check_relators(ip);
  return ip;
}

InducedPresentation free_crossed_module_presentation(
    const PermGroup& p, const std::vector<std::pair<std::string, Permutation>>& w) {
  ElementTable pt(p);
  const std::size_t labels = w.size();
  const std::size_t n = labels * pt.size();

  std::vector<std::string> names;
  std::vector<Permutation> boundary(n);
  std::vector<std::size_t> boundary_index(n);
  for (std::size_t pi = 0; pi < pt.size(); ++pi)
    for (std::size_t r = 0; r < labels; ++r) {
      std::size_t g = pi * labels + r;
      names.push_back(w[r].first + "_" + std::to_string(pi));
      boundary[g] = w[r].second.conjugate(pt[pi]);
      boundary_index[g] = pt.index_of(boundary[g]);
    }

  // (r, p)^q = (r, p q)
  auto act = [&](std::size_t gen, std::size_t qi) {
    return pt.index_of(pt[gen / labels] * pt[qi]) * labels + gen % labels;
  };

  std::vector<Word> relators;
  std::set<RelatorKey> seen;
  add_peiffer(relators, seen, boundary_index, act);

  std::vector<std::vector<std::uint32_t>> action;
  for (const auto& g : p.generators()) {
    std::size_t qi = pt.index_of(g);
    std::vector<std::uint32_t> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<std::uint32_t>(act(i, qi));
    action.push_back(std::move(row));
  }

  InducedPresentation ip{Presentation(std::move(names), std::move(relators)),
                         p,
                         pt.elements(),
                         {},
                         std::move(boundary),
                         std::move(action)};
  check_relators(ip);
  return ip;
}

std::string group_name(const PermGroup& g) {
  const std::uint64_t order = g.order();
  if (order == 1) return "1";
  if (g.is_abelian()) return cyclic_product_name(abelian_invariants(g));
  if (order > kIsomorphismSearchBound) return "";
  static const std::vector<std::pair<std::string, PermGroup (*)()>> candidates = {
      {"S3", [] { return symmetric(3); }},
      {"D8", [] { return dihedral(8); }},
      {"Q8",
       [] {
         return PermGroup(8, {Permutation::from_cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}),
                              Permutation::from_cycles(8, {{1, 5, 3, 7}, {2, 8, 4, 6}})});
       }},
      {"D10", [] { return dihedral(10); }},
      {"A4", [] { return alternating(4); }},
      {"D12", [] { return dihedral(12); }},
      {"S4", [] { return symmetric(4); }},
      {"SL(2,3)", [] { return sl23(); }},
      {"GL(2,3)", [] { return gl23(); }},
      {"S4 x C2", [] { return direct_product(symmetric(4), cyclic(2)); }},
      {"A5", [] { return alternating(5); }},
      {"C3 x SL(2,3)", [] { return direct_product(cyclic(3), sl23()); }},
      {"S5", [] { return symmetric(5); }},
  };
  for (const auto& [name, make] : candidates) {
    PermGroup h = make();
    if (h.order() == order && isomorphic(g, h)) return name;
  }
  return "";
}

nlohmann::ordered_json to_json(const Fingerprint& f) {
  nlohmann::ordered_json j;
  j["order"] = f.order;
  j["abelianization"] = f.abelianization;
  j["center_order"] = f.center_order;
  j["derived_order"] = f.derived_order;
  nlohmann::ordered_json orders = nlohmann::ordered_json::object();
  for (const auto& [o, c] : f.element_orders) orders[std::to_string(o)] = c;
  j["element_orders"] = std::move(orders);
  return j;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["subgroup"] = subgroup;
  j["subgroup_generators"] = xmodlab::to_string(subgroup_generators);
  j["order"] = order;
  j["pi2"] = pi2;
  j["pi2_name"] = cyclic_product_name(pi2);
  j["pi1"] = {{"name", pi1_name}, {"fingerprint", xmodlab::to_json(pi1)}};
  j["group"] = {{"name", name}, {"fingerprint", xmodlab::to_json(fingerprint)}};
  j["normal_closure_order"] = normal_closure_order;
  j["presentation"] = {{"generators", generators}, {"relators", relators}};
  j["cosets_defined"] = cosets_defined;
  return j;
}

Induced induce(const CrossedModule& x, const GroupHom& iota, std::size_t max_cosets,
               std::vector<Permutation> transversal) {
  auto start = std::chrono::steady_clock::now();
  InducedPresentation ip = induced_presentation(x, iota, std::move(transversal));
  CosetTable table = todd_coxeter(ip.presentation, {}, max_cosets);
  PermutationRep rep = perm_rep(table);

  std::optional<CrossedModule> result;
  try {
    GroupHom boundary(rep.group, ip.range, ip.boundary);
    std::vector<GroupHom> action;
    for (const auto& row : ip.action) {
      std::vector<Permutation> images;
      images.reserve(row.size());
      for (std::uint32_t i : row) images.push_back(rep.generator_images[i]);
      action.emplace_back(rep.group, rep.group, std::move(images));
    }
    result.emplace(std::move(boundary), std::move(action));
  } catch (const RelationViolated& e) {
    throw ValidationFailed(std::string("induced maps are not homomorphisms: ") + e.what());
  } catch (const InvalidAction& e) {
    throw ValidationFailed(std::string("induced action is invalid: ") + e.what());
  }
  ValidationReport check = validate(*result);
  if (!check.ok()) throw ValidationFailed("induced crossed module: " + check.summary());

  Report report;
  report.subgroup_generators = iota.image().generators();
  report.subgroup = xmodlab::to_string(report.subgroup_generators);
  report.order = result->source().order();
  report.pi2 = pi2(*result).invariants;
  PermGroup p1 = pi1(*result);
  report.pi1 = fingerprint(p1);
  report.pi1_name = group_name(p1);
  report.fingerprint = fingerprint(result->source());
  report.name = group_name(result->source());
  std::vector<Permutation> dm;
  for (const auto& g : x.source().generators()) dm.push_back(iota(x.boundary_of(g)));
  report.normal_closure_order = normal_closure(iota.target(), dm).order();
  report.generators = ip.presentation.generator_count();
  report.relators = ip.presentation.relators().size();
  report.cosets_defined = table.total_defined();
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return Induced{std::move(*result), std::move(report)};
}

Induced induce_subgroup(const PermGroup& q, const PermGroup& p, std::size_t max_cosets,
                        std::vector<Permutation> transversal) {
  if (!is_subgroup(p, q)) throw NotSubgroup("P is not a subgroup of Q");
  return induce(identity_xmod(p), GroupHom::inclusion(p, q), max_cosets,
                std::move(transversal));
}

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {"<(1,2)>", "(1,2)", 48, {2}, "1", "GL(2,3)"},
      {"S3", "(1,2),(1,2,3)", 48, {2}, "1", "GL(2,3)"},
      {"<(1,2),(3,4)>", "(1,2),(3,4)", 48, {2}, "1", "S4 x C2"},
      {"D8", "(1,2,3,4),(1,3)", 48, {2}, "1", "S4 x C2"},
      {"C4", "(1,2,3,4)", 96, {4}, "1", ""},
      {"C3", "(1,2,3)", 72, {6}, "C2", ""},
      {"<(1,2)(3,4)>", "(1,2)(3,4)", 128, {2, 2, 2, 4}, "S3", ""},
  };
  return rows;
}

TableResult run_table(std::size_t max_cosets, std::vector<std::size_t> rows) {
  const auto& all = table_rows();
  if (rows.empty())
    for (std::size_t i = 0; i < all.size(); ++i) rows.push_back(i);
  for (std::size_t r : rows)
    if (r >= all.size()) throw ParseError("table has rows 1 to " + std::to_string(all.size()), 0);

  const PermGroup s4 = symmetric(4);
  auto compute = [&](std::size_t r) {
    PermGroup p(4, parse_permutation_list(all[r].generators, 4));
    Induced result = induce_subgroup(s4, p, max_cosets);
    result.report.subgroup = all[r].label;
    return result;
  };

  TableResult out;
  out.rows = rows;
  if (std::thread::hardware_concurrency() > 1) {
    std::vector<std::future<Induced>> jobs;
    for (std::size_t r : rows) jobs.push_back(std::async(std::launch::async, compute, r));
    for (auto& j : jobs) out.induced.push_back(j.get());
  } else {
    for (std::size_t r : rows) out.induced.push_back(compute(r));
  }
  return out;
}

std::vector<std::string> verify_table(const TableResult& result) {
  const auto& all = table_rows();
  std::vector<std::string> diffs;
  auto join = [](const std::vector<std::int64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  };
  for (std::size_t k = 0; k < result.rows.size(); ++k) {
    const TableRow& want = all[result.rows[k]];
    const Report& got = result.induced[k].report;
    std::string row = "row " + std::to_string(result.rows[k] + 1) + " (" + want.label + "): ";
    if (got.order != want.order)
      diffs.push_back(row + "order " + std::to_string(got.order) + ", expected " +
                      std::to_string(want.order));
    if (got.pi2 != want.pi2)
      diffs.push_back(row + "pi2 " + join(got.pi2) + ", expected " + join(want.pi2));
    if (got.pi1_name != want.pi1)
      diffs.push_back(row + "pi1 " + got.pi1_name + ", expected " + want.pi1);
    if (!want.name.empty() && got.name != want.name)
      diffs.push_back(row + "group " + (got.name.empty() ? "unnamed" : got.name) +
                      ", expected " + want.name);
  }
  auto find = [&](std::size_t r) -> const Induced* {
    for (std::size_t k = 0; k < result.rows.size(); ++k)
      if (result.rows[k] == r) return &result.induced[k];
    return nullptr;
  };
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{0, 1}, {2, 3}}) {
    const Induced* x = find(a);
    const Induced* y = find(b);
    if (x && y && !xmod_isomorphic(x->xmod, y->xmod))
      diffs.push_back("rows " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                      ": crossed modules are not isomorphic");
  }
  return diffs;
}

}  // namespace xmodlab
