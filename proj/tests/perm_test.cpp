#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "xmodlab/element_table.hpp"
#include "xmodlab/errors.hpp"
#include "xmodlab/group_hom.hpp"
#include "xmodlab/group_ops.hpp"
#include "xmodlab/perm_group.hpp"
#include "xmodlab/permutation.hpp"

using namespace xmodlab;
using xmodlab::testing::closure;
using xmodlab::testing::random_generators;
using xmodlab::testing::random_permutation;

TEST(PermutationTest, ParsesAndPrintsCycleNotation) {
  Permutation p = parse_permutation("(1,2)(3,4)", 4);
  EXPECT_EQ(p.images(), (std::vector<Point>{1, 0, 3, 2}));
  EXPECT_EQ(p.to_string(), "(1,2)(3,4)");
  EXPECT_EQ(parse_permutation("()", 5).to_string(), "()");
  EXPECT_EQ(parse_permutation("(3,1,2)", 0).to_string(), "(1,2,3)");
  EXPECT_EQ(parse_permutation(" ( 1 , 2 ) ", 0).degree(), 2u);
}

TEST(PermutationTest, ComposesLeftToRight) {
  Permutation a = parse_permutation("(1,2)", 3);
  Permutation b = parse_permutation("(2,3)", 3);
  // 1 -> 2 under a, then 2 -> 3 under b.
  EXPECT_EQ((a * b)[0], 2u);
  EXPECT_EQ((a * b).to_string(), "(1,3,2)");

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Permutation p = random_permutation(9, rng), q = random_permutation(9, rng);
    EXPECT_EQ((p * q).images(), xmodlab::testing::compose_images(p, q));
    EXPECT_TRUE((p * p.inverse()).is_identity());
    EXPECT_EQ(p.conjugate(q), q.inverse() * p * q);
    EXPECT_EQ(p.power(static_cast<long long>(p.order())), Permutation(9));
    EXPECT_EQ(p.order(), xmodlab::testing::element_order(p));
    EXPECT_EQ(p.power(-3), p.inverse().power(3));
    EXPECT_EQ(parse_permutation(p.to_string(), 9), p);
  }
}

TEST(PermutationTest, RejectsMalformedInput) {
  auto position = [](const std::string& text, std::size_t degree) -> long {
    try {
      parse_permutation(text, degree);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  EXPECT_EQ(position("(1,2", 0), 4);
  EXPECT_EQ(position("(1,x)", 0), 3);
  EXPECT_THROW(parse_permutation("(1,1)", 0), DegreeMismatch);
  EXPECT_THROW(parse_permutation("(1,5)", 4), DegreeMismatch);
  EXPECT_THROW(parse_permutation("(0,1)", 0), Error);
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), DegreeMismatch);
}

TEST(PermutationTest, ParsesGeneratorLists) {
  auto gens = parse_permutation_list("(1,2),(1,2,3,4)", 0);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0].degree(), 4u);
  EXPECT_EQ(to_string(gens), "(1,2),(1,2,3,4)");
  EXPECT_THROW(parse_permutation_list("(1,2),,(1,3)", 0), ParseError);
}

TEST(PermGroupTest, OrdersOfNamedGroups) {
  const std::uint64_t factorial[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(symmetric(n).order(), factorial[n]) << "S" << n;
    EXPECT_EQ(cyclic(n).order(), n) << "C" << n;
    if (n >= 3) {
      EXPECT_EQ(alternating(n).order(), factorial[n] / 2) << "A" << n;
    }
  }
  EXPECT_EQ(dihedral(8).order(), 8u);
  EXPECT_EQ(dihedral(12).order(), 12u);
  EXPECT_EQ(gl23().order(), 48u);
  EXPECT_EQ(sl23().order(), 24u);
  EXPECT_EQ(trivial_group().order(), 1u);
  EXPECT_EQ(direct_product(symmetric(4), cyclic(2)).order(), 48u);
  EXPECT_EQ(symmetric(12).order(), 479001600u);
}

TEST(PermGroupTest, OrderAndMembershipMatchClosure) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t degree = 3 + trial % 5;
    auto gens = random_generators(degree, 1 + trial % 3, rng);
    // Sparse generators keep some groups small.
    if (trial % 2) gens = {gens[0].power(2)};
    PermGroup g(degree, gens);
    auto all = closure(degree, gens);
    ASSERT_EQ(g.order(), all.size());
    for (int k = 0; k < 30; ++k) {
      Permutation p = random_permutation(degree, rng);
      EXPECT_EQ(g.contains(p), all.count(p) == 1);
    }
    for (const auto& x : all) EXPECT_TRUE(g.contains(x));
  }
}

TEST(PermGroupTest, BasePrefixGivesPointwiseStabilizers) {
  PermGroup s5(5, symmetric(5).generators(), {3, 4});
  const auto& chain = s5.stabilizer_chain();
  ASSERT_GE(chain.size(), 2u);
  EXPECT_EQ(chain[0].base_point, 3u);
  EXPECT_EQ(chain[1].base_point, 4u);
  EXPECT_EQ(s5.order(), 120u);
}

TEST(ElementTableTest, SortedWithIdentityFirst) {
  ElementTable t(symmetric(4));
  ASSERT_EQ(t.size(), 24u);
  EXPECT_TRUE(t[0].is_identity());
  EXPECT_TRUE(std::is_sorted(t.elements().begin(), t.elements().end()));
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(t.index_of(t[i]), i);
    for (std::size_t g = 0; g < t.generator_count(); ++g)
      EXPECT_EQ(t[t.right_mult(i, g)], t[i] * t.generators()[g]);
  }
  EXPECT_THROW(t.index_of(parse_permutation("(1,5)", 5)), NotSubgroup);
  EXPECT_THROW(ElementTable(symmetric(8), 1000), BoundExceeded);
}

TEST(GroupHomTest, SignOfS4) {
  PermGroup s4 = symmetric(4);
  PermGroup c2 = cyclic(2);
  std::vector<Permutation> images;
  for (const auto& g : s4.generators())
    images.push_back(g.order() == 2 || g.order() == 4 ? c2.generators()[0] : c2.identity());
  GroupHom sign(s4, c2, images);
  EXPECT_EQ(sign.kernel().order(), 12u);
  EXPECT_TRUE(sign.kernel() == alternating(4));
  EXPECT_EQ(sign.image().order(), 2u);
  EXPECT_FALSE(sign.is_injective());
  EXPECT_EQ(sign(parse_permutation("(1,2,3)", 4)), c2.identity());
}

TEST(GroupHomTest, RejectsNonHomomorphisms) {
  PermGroup c4 = cyclic(4);
  PermGroup c2 = cyclic(2);
  // A generator of order 4 cannot go to an element of order 3.
  EXPECT_THROW(GroupHom(c4, cyclic(3), {cyclic(3).generators()[0]}), RelationViolated);
  EXPECT_NO_THROW(GroupHom(c4, c2, {c2.generators()[0]}));
  EXPECT_THROW(GroupHom(c4, c2, {}), Error);
}

TEST(GroupHomTest, KernelTimesImageIsSourceOrder) {
  std::mt19937 rng(5);
  PermGroup s4 = symmetric(4);
  ElementTable t(s4);
  for (int trial = 0; trial < 30; ++trial) {
    // Inner automorphism by a random element.
    Permutation by = t[rng() % t.size()];
    std::vector<Permutation> images;
    for (const auto& g : s4.generators()) images.push_back(g.conjugate(by));
    GroupHom inner(s4, s4, images);
    EXPECT_TRUE(inner.is_bijective());
    EXPECT_EQ(inner.kernel().order(), 1u);
    for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(inner(t[i]), t[i].conjugate(by));
  }
  Quotient q = quotient(s4, normal_closure(s4, {parse_permutation("(1,2)(3,4)", 4)}));
  EXPECT_EQ(q.group.order(), 6u);
  EXPECT_EQ(q.projection.kernel().order() * q.projection.image().order(), 24u);
}

TEST(GroupHomTest, LargeSourceUsesGraphGroup) {
  PermGroup s8 = symmetric(8);
  PermGroup c2 = cyclic(2);
  std::vector<Permutation> images(s8.generators().size(), c2.generators()[0]);
  for (std::size_t i = 0; i < images.size(); ++i)
    if (s8.generators()[i].order() % 2 == 1) images[i] = c2.identity();
  GroupHom sign(s8, c2, images);
  EXPECT_EQ(sign.kernel().order(), 20160u);
  EXPECT_EQ(sign(parse_permutation("(1,2,3)(4,5)", 8)), c2.generators()[0]);
  EXPECT_EQ(sign(parse_permutation("(1,2)(4,5)", 8)), c2.identity());
}

TEST(GroupOpsTest, CenterAndDerivedSubgroupMatchBruteForce) {
  for (const PermGroup& g : {symmetric(4), dihedral(8), gl23(), sl23(), alternating(5),
                             direct_product(symmetric(3), cyclic(4))}) {
    auto all = xmodlab::testing::elements(g);
    std::size_t central = 0;
    for (const auto& x : all)
      if (std::all_of(all.begin(), all.end(), [&](const Permutation& y) { return x * y == y * x; }))
        ++central;
    EXPECT_EQ(center(g).order(), central);

    std::vector<Permutation> commutators;
    for (const auto& x : all)
      for (const auto& y : all) commutators.push_back(x.inverse() * y.inverse() * x * y);
    EXPECT_EQ(derived_subgroup(g).order(), closure(g.degree(), commutators).size());
  }
}

// For an abelian group, the number of solutions of x^k = 1 is the product of
// gcd(k, d_i) over the invariant factors.
TEST(GroupOpsTest, AbelianInvariantsMatchElementOrderCensus) {
  std::mt19937 rng(3);
  std::vector<PermGroup> groups = {
      cyclic(12), direct_product(cyclic(2), cyclic(4)),
      direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(6)),
      direct_product(cyclic(3), cyclic(9)), trivial_group(),
      PermGroup(8, {parse_permutation("(1,2)(3,4)", 8), parse_permutation("(5,6,7,8)", 8)})};
  for (const auto& g : groups) {
    auto inv = abelian_invariants(g);
    std::int64_t product = 1;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      product *= inv[i];
      if (i) {
        EXPECT_EQ(inv[i] % inv[i - 1], 0);
      }
      EXPECT_GT(inv[i], 1);
    }
    EXPECT_EQ(static_cast<std::uint64_t>(product), g.order());
    auto all = xmodlab::testing::elements(g);
    for (std::int64_t k = 1; k <= 36; ++k) {
      std::size_t solutions = 0;
      for (const auto& x : all)
        if (x.power(k).is_identity()) ++solutions;
      std::int64_t predicted = 1;
      for (auto d : inv) predicted *= std::gcd(k, d);
      EXPECT_EQ(static_cast<std::int64_t>(solutions), predicted) << "k=" << k;
    }
  }
  EXPECT_THROW(abelian_invariants(symmetric(3)), NonAbelian);
  EXPECT_EQ(abelianization_invariants(symmetric(4)), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(abelianization_invariants(gl23()), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(abelianization_invariants(sl23()), (std::vector<std::int64_t>{3}));
}

TEST(GroupOpsTest, NormalClosureAndQuotient) {
  PermGroup s4 = symmetric(4);
  EXPECT_EQ(normal_closure(s4, {parse_permutation("(1,2)", 4)}).order(), 24u);
  EXPECT_EQ(normal_closure(s4, {parse_permutation("(1,2,3)", 4)}).order(), 12u);
  EXPECT_EQ(normal_closure(s4, {parse_permutation("(1,2)(3,4)", 4)}).order(), 4u);
  EXPECT_THROW(normal_closure(alternating(4), {parse_permutation("(1,2)", 4)}), NotSubgroup);

  PermGroup v(4, {parse_permutation("(1,2)(3,4)", 4), parse_permutation("(1,3)(2,4)", 4)});
  Quotient q = quotient(s4, v);
  EXPECT_EQ(q.group.order(), 6u);
  EXPECT_EQ(q.representatives.size(), 6u);
  EXPECT_TRUE(q.representatives.front().is_identity());
  EXPECT_THROW(quotient(s4, PermGroup(4, {parse_permutation("(1,2)", 4)})), NotNormal);
}

TEST(GroupOpsTest, CyclicProductNames) {
  EXPECT_EQ(cyclic_product_name({2, 2, 2, 4}), "C4 x C2^3");
  EXPECT_EQ(cyclic_product_name({}), "1");
  EXPECT_EQ(cyclic_product_name({6}), "C6");
  EXPECT_EQ(cyclic_product_name({2, 0}), "Z x C2");
}

TEST(GroupOpsTest, FingerprintsSeparateOrder48Groups) {
  Fingerprint a = fingerprint(gl23());
  Fingerprint b = fingerprint(direct_product(symmetric(4), cyclic(2)));
  EXPECT_EQ(a.order, 48u);
  EXPECT_EQ(b.order, 48u);
  EXPECT_FALSE(a == b);
  EXPECT_EQ(a.center_order, 2u);
  EXPECT_EQ(a.element_orders.at(8), 12u);
}
