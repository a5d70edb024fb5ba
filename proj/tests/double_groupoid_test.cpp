#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "xmodlab/double_groupoid.hpp"
#include "xmodlab/errors.hpp"
#include "xmodlab/induced.hpp"

using namespace xmodlab;
using xmodlab::testing::elements;

namespace {

PermGroup klein4() {
  return PermGroup(4, {parse_permutation("(1,2)(3,4)", 4), parse_permutation("(1,3)(2,4)", 4)});
}

CrossedModule broken_s3() {
  PermGroup s3 = symmetric(3);
  return CrossedModule(GroupHom(s3, trivial_group(), {trivial_group().identity(),
                                                      trivial_group().identity()}),
                       {});
}

// Compositions written directly from the gluing rules, independent of
// DoubleGroupoid.
Square glue_h(const CrossedModule& x, const Square& l, const Square& r) {
  return {l.n * r.n, l.w, r.e, l.s * r.s, x.act(l.m, r.s) * r.m};
}

Square glue_v(const CrossedModule& x, const Square& t, const Square& b) {
  return {t.n, t.w * b.w, t.e * b.e, b.s, b.m * x.act(t.m, b.e)};
}

std::vector<Square> all_squares(const CrossedModule& x) {
  std::vector<Square> out;
  auto ps = elements(x.range());
  auto ms = elements(x.source());
  for (const auto& n : ps)
    for (const auto& w : ps)
      for (const auto& e : ps)
        for (const auto& m : ms) {
          // s = w^-1 n e d(m)^-1
          out.push_back({n, w, e, w.inverse() * n * e * x.boundary_of(m).inverse(), m});
        }
  return out;
}

// Walks every composable 2x2 block and reports the first one on which the
// two composites differ.
std::optional<Block> literal_interchange(const CrossedModule& x) {
  auto sq = all_squares(x);
  for (const auto& a : sq)
    for (const auto& b : sq) {
      if (b.w != a.e) continue;
      for (const auto& c : sq) {
        if (c.n != a.s) continue;
        for (const auto& d : sq) {
          if (d.n != b.s || d.w != c.e) continue;
          Square hv = glue_v(x, glue_h(x, a, b), glue_h(x, c, d));
          Square vh = glue_h(x, glue_v(x, a, c), glue_v(x, b, d));
          if (hv != vh) return Block{a, b, c, d};
        }
      }
    }
  return std::nullopt;
}

Square random_square(const DoubleGroupoid& g, std::mt19937& rng) {
  auto ps = elements(g.xmod().range());
  auto ms = elements(g.xmod().source());
  auto pick = [&](const auto& v) { return v[rng() % v.size()]; };
  return g.square(pick(ps), pick(ps), pick(ps), pick(ms));
}

const Induced& row7() {
  static const Induced ind =
      induce_subgroup(symmetric(4), PermGroup(4, {parse_permutation("(1,2)(3,4)", 4)}));
  return ind;
}

}  // namespace

TEST(DoubleGroupoidTest, Squares) {
  DoubleGroupoid g(identity_xmod(symmetric(3)));
  EXPECT_EQ(g.square_count(), 1296u);
  auto sq = g.squares();
  ASSERT_EQ(sq.size(), 1296u);
  for (const auto& s : sq) ASSERT_TRUE(g.is_square(s));
  Square bad = sq[5];
  bad.s = bad.s * parse_permutation("(1,2)", 3);
  EXPECT_FALSE(g.is_square(bad));

  Permutation t = parse_permutation("(1,2)", 3);
  Square th = g.thin(t, Permutation(3), Permutation(3));
  EXPECT_TRUE(g.is_thin(th));
  EXPECT_EQ(th.s, t);
  EXPECT_EQ(th.to_string(), "((1,2)|() ()|(1,2); ())");
  std::ostringstream os;
  os << th;
  EXPECT_EQ(os.str(), th.to_string());

  DoubleGroupoid big(identity_xmod(symmetric(6)));
  EXPECT_FALSE(big.materializable());
  EXPECT_THROW(big.squares(), BoundExceeded);
}

TEST(DoubleGroupoidTest, CompositionMatchesGluingRules) {
  std::mt19937 rng(11);
  for (const auto& x : {identity_xmod(symmetric(3)), normal_inclusion_xmod(klein4(), symmetric(4)),
                        identity_xmod(dihedral(8))}) {
    DoubleGroupoid g(x);
    for (int i = 0; i < 300; ++i) {
      Square a = random_square(g, rng);
      Square b = random_square(g, rng);
      Square right = g.square(b.n, a.e, b.e, b.m);
      Square below = g.square(a.s, b.w, b.e, b.m);
      Square h = g.compose_h(a, right);
      Square v = g.compose_v(a, below);
      EXPECT_EQ(h, glue_h(x, a, right));
      EXPECT_EQ(v, glue_v(x, a, below));
      EXPECT_TRUE(g.is_square(h));
      EXPECT_TRUE(g.is_square(v));
      if (b.w != a.e) {
        EXPECT_THROW(g.compose_h(a, b), EdgeMismatch);
      }
      if (b.n != a.s) {
        EXPECT_THROW(g.compose_v(a, b), EdgeMismatch);
      }
    }
  }
}

TEST(DoubleGroupoidTest, IdentitiesAndInverses) {
  std::mt19937 rng(5);
  DoubleGroupoid g(normal_inclusion_xmod(klein4(), symmetric(4)));
  for (int i = 0; i < 200; ++i) {
    Square a = random_square(g, rng);
    EXPECT_EQ(g.compose_h(g.identity_h(a.w), a), a);
    EXPECT_EQ(g.compose_h(a, g.identity_h(a.e)), a);
    EXPECT_EQ(g.compose_v(g.identity_v(a.n), a), a);
    EXPECT_EQ(g.compose_v(a, g.identity_v(a.s)), a);
    EXPECT_EQ(g.compose_h(a, g.inverse_h(a)), g.identity_h(a.w));
    EXPECT_EQ(g.compose_h(g.inverse_h(a), a), g.identity_h(a.e));
    EXPECT_EQ(g.compose_v(a, g.inverse_v(a)), g.identity_v(a.n));
    EXPECT_EQ(g.compose_v(g.inverse_v(a), a), g.identity_v(a.s));

    Square b = random_square(g, rng);
    Square t1 = g.thin(a.n, a.w, a.e);
    EXPECT_TRUE(g.is_thin(g.compose_h(t1, g.thin(b.n, a.e, b.e))));
    EXPECT_TRUE(g.is_thin(g.compose_v(t1, g.thin(t1.s, b.w, b.e))));
  }
}

TEST(DoubleGroupoidTest, AssociativityExhaustive) {
  CrossedModule x = identity_xmod(cyclic(3));
  DoubleGroupoid g(x);
  auto sq = g.squares();
  for (const auto& a : sq)
    for (const auto& b : sq) {
      for (const auto& c : sq) {
        if (b.w == a.e && c.w == b.e) {
          ASSERT_EQ(g.compose_h(g.compose_h(a, b), c), g.compose_h(a, g.compose_h(b, c)));
        }
        if (b.n == a.s && c.n == b.s) {
          ASSERT_EQ(g.compose_v(g.compose_v(a, b), c), g.compose_v(a, g.compose_v(b, c)));
        }
      }
    }
}

TEST(DoubleGroupoidTest, AssociativitySampled) {
  std::mt19937 rng(3);
  DoubleGroupoid g(normal_inclusion_xmod(klein4(), symmetric(4)));
  for (int i = 0; i < 500; ++i) {
    Square a = random_square(g, rng);
    Square b = random_square(g, rng);
    Square c = random_square(g, rng);
    b = g.square(b.n, a.e, b.e, b.m);
    c = g.square(c.n, b.e, c.e, c.m);
    EXPECT_EQ(g.compose_h(g.compose_h(a, b), c), g.compose_h(a, g.compose_h(b, c)));
  }
}

TEST(DoubleGroupoidTest, Connections) {
  DoubleGroupoid g(identity_xmod(symmetric(4)));
  std::mt19937 rng(17);
  auto ps = elements(symmetric(4));
  for (int i = 0; i < 100; ++i) {
    Permutation a = ps[rng() % ps.size()];
    Permutation b = ps[rng() % ps.size()];
    // The transport law: a block of connections and identities.
    Square top = g.compose_h(g.connection_plus(a), g.identity_v(b));
    Square bottom = g.compose_h(g.identity_h(b), g.connection_plus(b));
    EXPECT_EQ(g.compose_v(top, bottom), g.connection_plus(a * b));
    Square both = g.compose_h(g.connection_plus(a), g.connection_minus(a));
    EXPECT_EQ(both, g.thin(a, a, a));
    EXPECT_EQ(both.s, a);
    Square stacked = g.compose_v(g.connection_plus(a), g.connection_minus(a));
    EXPECT_EQ(stacked, g.thin(a, a, a));
    EXPECT_TRUE(g.is_thin(g.connection_plus(a)));
    EXPECT_TRUE(g.is_thin(g.connection_minus(a)));
  }
}

TEST(DoubleGroupoidTest, InterchangeAgreesWithLiteralOracle) {
  for (const auto& x : {identity_xmod(cyclic(2)), identity_xmod(cyclic(3)),
                        normal_inclusion_xmod(PermGroup(2, {}), cyclic(2)), broken_s3()}) {
    DoubleGroupoid g(x);
    InterchangeReport r = check_interchange(g, 0, 1);
    EXPECT_TRUE(r.exhaustive);
    auto lit = literal_interchange(x);
    EXPECT_EQ(r.ok(), !lit.has_value());
  }
}

TEST(DoubleGroupoidTest, InterchangeExhaustive) {
  std::vector<CrossedModule> xs = {identity_xmod(symmetric(3)), identity_xmod(dihedral(8)),
                                   normal_inclusion_xmod(klein4(), symmetric(4)),
                                   normal_inclusion_xmod(alternating(4), symmetric(4)),
                                   identity_xmod(symmetric(4))};
  for (const auto& x : xs) {
    ASSERT_LE(x.range().order() * x.source().order(), 576u);
    DoubleGroupoid g(x);
    InterchangeReport r = check_interchange(g, 0, 1);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.blocks, interchange_class_count(g));
    EXPECT_TRUE(r.ok()) << r.counterexample->a;
  }
}

TEST(DoubleGroupoidTest, InterchangeSampledOnInducedModule) {
  DoubleGroupoid g(row7().xmod);
  InterchangeReport r = check_interchange(g, 10000, 42, 0);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.blocks, 10000u);
  EXPECT_TRUE(r.ok());
}

TEST(DoubleGroupoidTest, BrokenPeifferGivesCounterexample) {
  CrossedModule x = broken_s3();
  DoubleGroupoid g(x);
  InterchangeReport r = check_interchange(g, 1000, 9);
  ASSERT_FALSE(r.ok());
  const Block& b = *r.counterexample;
  EXPECT_NE(glue_v(x, glue_h(x, b.a, b.b), glue_h(x, b.c, b.d)),
            glue_h(x, glue_v(x, b.a, b.c), glue_v(x, b.b, b.d)));
  InterchangeReport sampled = check_interchange(g, 1000, 9, 0);
  EXPECT_FALSE(sampled.ok());
}

TEST(DoubleGroupoidTest, GammaRoundTrip) {
  for (const auto& x : {identity_xmod(symmetric(3)), normal_inclusion_xmod(klein4(), symmetric(4)),
                        row7().xmod}) {
    CrossedModule y = gamma(DoubleGroupoid(x));
    EXPECT_EQ(y.source().order(), x.source().order());
    EXPECT_TRUE(validate(y).ok());
    auto phi = xmod_isomorphic(x, y);
    ASSERT_TRUE(phi.has_value());
    EXPECT_TRUE(is_morphism(x, y, *phi));
  }
}
