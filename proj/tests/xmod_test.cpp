#include <gtest/gtest.h>

#include "test_support.hpp"
#include "xmodlab/crossed_module.hpp"
#include "xmodlab/errors.hpp"
#include "xmodlab/group_ops.hpp"

using namespace xmodlab;

namespace {

PermGroup klein4() {
  return PermGroup(4, {parse_permutation("(1,2)(3,4)", 4), parse_permutation("(1,3)(2,4)", 4)});
}

// Element-level oracle for both axioms, independent of validate().
bool axioms_hold(const CrossedModule& x) {
  auto ms = xmodlab::testing::elements(x.source());
  auto qs = xmodlab::testing::elements(x.range());
  for (const auto& m : ms) {
    for (const auto& q : qs)
      if (x.boundary_of(x.act(m, q)) != q.inverse() * x.boundary_of(m) * q) return false;
    for (const auto& n : ms)
      if (x.act(m, x.boundary_of(n)) != n.inverse() * m * n) return false;
  }
  return true;
}

// C2 acting on C3 x C3 by swapping factors, with trivial boundary.
CrossedModule swap_module(bool trivial_action) {
  PermGroup m(6, {parse_permutation("(1,2,3)", 6), parse_permutation("(4,5,6)", 6)});
  PermGroup q = cyclic(2);
  std::vector<Permutation> images = {parse_permutation("(4,5,6)", 6),
                                     parse_permutation("(1,2,3)", 6)};
  if (trivial_action) images = m.generators();
  GroupHom boundary(m, q, {q.identity(), q.identity()});
  return CrossedModule(boundary, {GroupHom(m, m, images)});
}

}  // namespace

TEST(CrossedModuleTest, StandardConstructionsAreValid) {
  std::vector<CrossedModule> xs = {identity_xmod(symmetric(3)), identity_xmod(dihedral(8)),
                                   identity_xmod(trivial_group()),
                                   normal_inclusion_xmod(klein4(), symmetric(4)),
                                   normal_inclusion_xmod(alternating(4), symmetric(4)),
                                   normal_inclusion_xmod(PermGroup(3, {}), cyclic(3)),
                                   swap_module(false)};
  for (const auto& x : xs) {
    ValidationReport r = validate(x);
    EXPECT_TRUE(r.ok()) << r.summary();
    EXPECT_TRUE(axioms_hold(x));
  }
}

TEST(CrossedModuleTest, ValidationFindsWitnesses) {
  // C3 onto A3 inside S3 with trivial action: a transposition inverts the
  // image, so CM1 fails.
  PermGroup m = cyclic(3);
  PermGroup q = symmetric(3);
  GroupHom boundary(m, q, {parse_permutation("(1,2,3)", 3)});
  CrossedModule bad(boundary, {GroupHom::identity(m), GroupHom::identity(m)});
  ValidationReport r = validate(bad);
  EXPECT_FALSE(r.cm1);
  ASSERT_TRUE(r.cm1_witness.has_value());
  const auto& [wm, wq] = *r.cm1_witness;
  EXPECT_NE(bad.boundary_of(bad.act(wm, wq)), wq.inverse() * bad.boundary_of(wm) * wq);
  EXPECT_FALSE(axioms_hold(bad));

  // Nonabelian M, trivial boundary and action: CM2 fails.
  PermGroup s3 = symmetric(3);
  CrossedModule broken(GroupHom(s3, trivial_group(), {trivial_group().identity(),
                                                      trivial_group().identity()}),
                       {});
  ValidationReport r2 = validate(broken);
  EXPECT_TRUE(r2.cm1);
  EXPECT_FALSE(r2.cm2);
  EXPECT_FALSE(r2.kernel_central);
  ASSERT_TRUE(r2.cm2_witness.has_value());
  EXPECT_NE(r2.cm2_witness->first * r2.cm2_witness->second,
            r2.cm2_witness->second * r2.cm2_witness->first);
  EXPECT_THROW(pi2(broken), ValidationFailed);
  EXPECT_THROW(pi1(broken), ValidationFailed);
}

TEST(CrossedModuleTest, RejectsBadActions) {
  PermGroup m = cyclic(4);
  PermGroup q = cyclic(2);
  GroupHom boundary(m, q, {q.identity()});
  // Squaring is not an automorphism of C4.
  GroupHom square(m, m, {m.generators()[0].power(2)});
  EXPECT_THROW(CrossedModule(boundary, {square}), InvalidAction);
  EXPECT_THROW(CrossedModule(boundary, {}), InvalidAction);
  // An automorphism of order 2 for a generator of order 3 is not an action.
  PermGroup c3 = cyclic(3);
  GroupHom inv(m, m, {m.generators()[0].inverse()});
  EXPECT_THROW(CrossedModule(GroupHom(m, c3, {c3.identity()}), {inv}), InvalidAction);
  EXPECT_THROW(normal_inclusion_xmod(PermGroup(4, {parse_permutation("(1,2)", 4)}), symmetric(4)),
               NotNormal);
}

TEST(CrossedModuleTest, HomotopyGroups) {
  CrossedModule v = normal_inclusion_xmod(klein4(), symmetric(4));
  EXPECT_EQ(pi1(v).order(), 6u);
  EXPECT_TRUE(pi2(v).invariants.empty());

  Pi2 p = pi2(swap_module(false));
  EXPECT_EQ(p.invariants, (std::vector<std::int64_t>{3, 3}));
  EXPECT_EQ(pi1(swap_module(false)).order(), 2u);

  EXPECT_EQ(pi1(identity_xmod(symmetric(4))).order(), 1u);
}

TEST(CrossedModuleTest, MorphismsAndIsomorphism) {
  CrossedModule a = identity_xmod(symmetric(3));
  EXPECT_TRUE(is_morphism(a, a, {GroupHom::identity(a.source()), GroupHom::identity(a.range())}));

  // The same crossed module on relabelled points.
  Permutation by = parse_permutation("(1,3)", 3);
  std::vector<Permutation> gens;
  PermGroup s3 = symmetric(3);
  for (const auto& g : s3.generators()) gens.push_back(g.conjugate(by));
  CrossedModule b = identity_xmod(PermGroup(3, gens));
  auto phi = xmod_isomorphic(a, b);
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(is_morphism(a, b, *phi));

  // Same groups, different actions.
  EXPECT_FALSE(xmod_isomorphic(swap_module(false), swap_module(true)).has_value());
  EXPECT_TRUE(xmod_isomorphic(swap_module(false), swap_module(false)).has_value());
  // Same groups, different boundaries.
  EXPECT_FALSE(xmod_isomorphic(identity_xmod(cyclic(2)),
                               normal_inclusion_xmod(PermGroup(2, {}), cyclic(2)))
                   .has_value());
}

TEST(CrossedModuleTest, JsonRoundTrip) {
  CrossedModule x = normal_inclusion_xmod(klein4(), symmetric(4));
  auto text = to_json(x).dump();
  CrossedModule y = crossed_module_from_json(nlohmann::json::parse(text));
  EXPECT_TRUE(y.source() == x.source());
  EXPECT_TRUE(y.range() == x.range());
  EXPECT_TRUE(validate(y).ok());
  EXPECT_TRUE(xmod_isomorphic(x, y).has_value());
  EXPECT_EQ(to_json(y).dump(), text);
  EXPECT_THROW(crossed_module_from_json(nlohmann::json::parse(R"({"M": {}})")), ParseError);
}
