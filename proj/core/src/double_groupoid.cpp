#include "xmodlab/double_groupoid.hpp"

#include <random>
#include <sstream>

#include "xmodlab/errors.hpp"

namespace xmodlab {

std::string Square::to_string() const {
  std::ostringstream os;
  os << '(' << n << '|' << w << ' ' << e << '|' << s << "; " << m << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Square& sq) { return os << sq.to_string(); }

Square DoubleGroupoid::square(const Permutation& n, const Permutation& w,
                              const Permutation& e, const Permutation& m) const {
  Permutation s = w.inverse() * n * e * x_.boundary_of(m).inverse();
  return Square{n, w, e, std::move(s), m};
}

Square DoubleGroupoid::thin(const Permutation& n, const Permutation& w,
                            const Permutation& e) const {
  return square(n, w, e, x_.source().identity());
}

bool DoubleGroupoid::is_square(const Square& sq) const {
  const auto& pt = x_.range_elements();
  if (!x_.source_elements().find(sq.m)) return false;
  for (const auto* p : {&sq.n, &sq.w, &sq.e, &sq.s})
    if (!pt.find(*p)) return false;
  return x_.boundary_of(sq.m) == sq.s.inverse() * sq.w.inverse() * sq.n * sq.e;
}

Square DoubleGroupoid::compose_h(const Square& left, const Square& right) const {
  if (left.e != right.w)
    throw EdgeMismatch("compose_h: east edge " + left.e.to_string() + " of the left square "
                       "differs from west edge " + right.w.to_string());
  return Square{left.n * right.n, left.w, right.e, left.s * right.s,
                x_.act(left.m, right.s) * right.m};
}

Square DoubleGroupoid::compose_v(const Square& top, const Square& bottom) const {
  if (top.s != bottom.n)
    throw EdgeMismatch("compose_v: south edge " + top.s.to_string() + " of the top square "
                       "differs from north edge " + bottom.n.to_string());
  return Square{top.n, top.w * bottom.w, top.e * bottom.e, bottom.s,
                bottom.m * x_.act(top.m, bottom.e)};
}

Square DoubleGroupoid::identity_h(const Permutation& x) const {
  Permutation one = x_.range().identity();
  return Square{one, x, x, one, x_.source().identity()};
}

Square DoubleGroupoid::identity_v(const Permutation& x) const {
  Permutation one = x_.range().identity();
  return Square{x, one, one, x, x_.source().identity()};
}

Square DoubleGroupoid::inverse_h(const Square& sq) const {
  Permutation s_inv = sq.s.inverse();
  return Square{sq.n.inverse(), sq.e, sq.w, s_inv, x_.act(sq.m, s_inv).inverse()};
}

Square DoubleGroupoid::inverse_v(const Square& sq) const {
  Permutation e_inv = sq.e.inverse();
  return Square{sq.s, sq.w.inverse(), e_inv, sq.n, x_.act(sq.m, e_inv).inverse()};
}

Square DoubleGroupoid::connection_plus(const Permutation& g) const {
  Permutation one = x_.range().identity();
  return Square{g, g, one, one, x_.source().identity()};
}

Square DoubleGroupoid::connection_minus(const Permutation& g) const {
  Permutation one = x_.range().identity();
  return Square{one, one, g, g, x_.source().identity()};
}

std::uint64_t DoubleGroupoid::square_count() const {
  std::uint64_t p = x_.range_elements().size();
  return p * p * p * x_.source_elements().size();
}

std::vector<Square> DoubleGroupoid::squares() const {
  if (!materializable())
    throw BoundExceeded("square universe of " + std::to_string(square_count()) +
                        " squares is too large to list");
  const auto& ps = x_.range_elements().elements();
  const auto& ms = x_.source_elements().elements();
  std::vector<Square> out;
  out.reserve(square_count());
  for (const auto& n : ps)
    for (const auto& w : ps)
      for (const auto& e : ps)
        for (const auto& m : ms) out.push_back(square(n, w, e, m));
  return out;
}

CrossedModule gamma(const DoubleGroupoid& g) {
  const CrossedModule& x = g.xmod();
  const ElementTable& mt = x.source_elements();
  const Permutation one = x.range().identity();
  const std::size_t nm = mt.size();

  // The squares (d m | 1 1 | 1; m), indexed like M.
  std::vector<Square> squares;
  squares.reserve(nm);
  for (const auto& m : mt.elements()) squares.push_back(g.square(x.boundary_of(m), one, one, m));
  auto index_of = [&](const Square& sq) {
    if (!(sq.w.is_identity() && sq.e.is_identity() && sq.s.is_identity()))
      throw ValidationFailed("composite left the family of squares " + sq.to_string());
    return mt.index_of(sq.m);
  };
  auto regular = [&](const Square& k) {
    std::vector<Point> images(nm);
    for (std::size_t i = 0; i < nm; ++i)
      images[i] = static_cast<Point>(index_of(g.compose_h(squares[i], k)));
    return Permutation::from_images(std::move(images));
  };

  std::vector<Permutation> gens;
  std::vector<Permutation> boundary;
  for (const auto& m : x.source().generators()) {
    const Square& sq = squares[mt.index_of(m)];
    gens.push_back(regular(sq));
    boundary.push_back(sq.n);
  }
  PermGroup source(nm, gens);

  std::vector<GroupHom> action;
  for (const auto& p : x.range().generators()) {
    Permutation p_inv = p.inverse();
    std::vector<Permutation> images;
    for (const auto& m : x.source().generators()) {
      const Square& sq = squares[mt.index_of(m)];
      Square above = g.square(p_inv * sq.n * p, p_inv, p_inv, x.source().identity());
      Square below = g.square(one, p, p, x.source().identity());
      images.push_back(regular(g.compose_v(g.compose_v(above, sq), below)));
    }
    action.emplace_back(source, source, std::move(images));
  }
  return CrossedModule(GroupHom(source, x.range(), std::move(boundary)), std::move(action));
}

std::uint64_t interchange_class_count(const DoubleGroupoid& g) {
  const std::uint64_t p = g.xmod().range_elements().size();
  const std::uint64_t m = g.xmod().source_elements().size();
  std::uint64_t total = 1;
  auto times = [&](std::uint64_t k) {
    if (total != 0 && k > UINT64_MAX / total) total = UINT64_MAX;
    else total *= k;
  };
  for (int i = 0; i < 3; ++i) times(p);
  for (int i = 0; i < 2; ++i) times(m);
  return total;
}

namespace {

// Index arithmetic for squares, with edges and labels as element indices.
class SquareEngine {
 public:
  using Index = std::uint32_t;
  struct Sq {
    Index n, w, e, s, m;
  };

  explicit SquareEngine(const CrossedModule& x) : x_(x) {
    const auto& pt = x.range_elements();
    const auto& mt = x.source_elements();
    np_ = pt.size();
    nm_ = mt.size();
    pmul_.resize(np_ * np_);
    pinv_.resize(np_);
    for (std::size_t a = 0; a < np_; ++a) {
      pinv_[a] = static_cast<Index>(pt.index_of(pt[a].inverse()));
      for (std::size_t b = 0; b < np_; ++b)
        pmul_[a * np_ + b] = static_cast<Index>(pt.index_of(pt[a] * pt[b]));
    }
    mmul_.resize(nm_ * nm_);
    dinv_.resize(nm_);
    for (std::size_t a = 0; a < nm_; ++a) {
      dinv_[a] = pinv_[x.boundary_index(a)];
      for (std::size_t b = 0; b < nm_; ++b)
        mmul_[a * nm_ + b] = static_cast<Index>(mt.index_of(mt[a] * mt[b]));
    }
    act_.resize(np_ * nm_);
    for (std::size_t q = 0; q < np_; ++q)
      for (std::size_t m = 0; m < nm_; ++m) act_[q * nm_ + m] = static_cast<Index>(x.act_index(m, q));
  }

  std::size_t p_size() const { return np_; }
  std::size_t m_size() const { return nm_; }

  Index pm(Index a, Index b) const { return pmul_[a * np_ + b]; }
  Index mm(Index a, Index b) const { return mmul_[a * nm_ + b]; }
  Index act(Index m, Index q) const { return act_[q * nm_ + m]; }

  Index boundary(Index m) const { return pinv_[dinv_[m]]; }

  // From d(m) = s^-1 w^-1 n e, s and n in terms of the others.
  Index south(Index n, Index w, Index e, Index m) const {
    return pm(pm(pm(pinv_[w], n), e), dinv_[m]);
  }
  Index north(Index w, Index e, Index m, Index s) const {
    return pm(pm(pm(w, s), boundary(m)), pinv_[e]);
  }
  Sq make(Index n, Index w, Index e, Index m) const { return Sq{n, w, e, south(n, w, e, m), m}; }

  Square to_square(const Sq& s) const {
    const auto& pt = x_.range_elements();
    const auto& mt = x_.source_elements();
    return Square{pt[s.n], pt[s.w], pt[s.e], pt[s.s], mt[s.m]};
  }

  // Labels of the two composites of [[a, b], [c, d]].
  Index h_then_v(const Sq& a, const Sq& b, const Sq& c, const Sq& d) const {
    Index top = mm(act(a.m, b.s), b.m);
    Index bottom = mm(act(c.m, d.s), d.m);
    return mm(bottom, act(top, d.e));
  }
  Index v_then_h(const Sq& a, const Sq& b, const Sq& c, const Sq& d) const {
    Index left = mm(c.m, act(a.m, c.e));
    Index right = mm(d.m, act(b.m, d.e));
    return mm(act(left, d.s), right);
  }

 private:
  const CrossedModule& x_;
  std::size_t np_ = 0, nm_ = 0;
  std::vector<Index> pmul_, pinv_, mmul_, dinv_, act_;
};

}  // namespace

InterchangeReport check_interchange(const DoubleGroupoid& g, std::uint64_t samples,
                                    std::uint32_t seed, std::uint64_t exhaustive_limit) {
  using Index = SquareEngine::Index;
  using Sq = SquareEngine::Sq;
  const SquareEngine eng(g.xmod());
  const auto np = static_cast<Index>(eng.p_size());
  const auto nm = static_cast<Index>(eng.m_size());
  InterchangeReport report;

  auto fail = [&](const Sq& a, const Sq& b, const Sq& c, const Sq& d) {
    report.counterexample =
        Block{eng.to_square(a), eng.to_square(b), eng.to_square(c), eng.to_square(d)};
  };

  if (interchange_class_count(g) <= exhaustive_limit) {
    report.exhaustive = true;
    // Both composite labels read only the labels and the edges b.s, c.e and
    // d.e. Since Q acts by automorphisms, each has the form
    // c.m^(d.s) X b.m^(d.e), so blocks with b.m = c.m = 1 decide all blocks.
    const Index one = 0;
    for (Index am = 0; am < nm; ++am) {
      const Sq a = eng.make(eng.boundary(am), one, one, am);
      for (Index bs = 0; bs < np; ++bs) {
        const Sq b{bs, one, one, bs, one};
        for (Index ce = 0; ce < np; ++ce) {
          const Sq c = eng.make(a.s, one, ce, one);
          for (Index de = 0; de < np; ++de)
            for (Index dm = 0; dm < nm; ++dm) {
              const Sq d = eng.make(bs, ce, de, dm);
              ++report.blocks;
              if (eng.h_then_v(a, b, c, d) != eng.v_then_h(a, b, c, d)) {
                fail(a, b, c, d);
                return report;
              }
            }
        }
      }
    }
    return report;
  }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<Index> p_dist(0, np - 1), m_dist(0, nm - 1);
  for (std::uint64_t k = 0; k < samples; ++k) {
    Sq a = eng.make(p_dist(rng), p_dist(rng), p_dist(rng), m_dist(rng));
    Sq b = eng.make(p_dist(rng), a.e, p_dist(rng), m_dist(rng));
    Sq c = eng.make(a.s, p_dist(rng), p_dist(rng), m_dist(rng));
    Sq d = eng.make(b.s, c.e, p_dist(rng), m_dist(rng));
    ++report.blocks;
    if (eng.h_then_v(a, b, c, d) != eng.v_then_h(a, b, c, d)) {
      fail(a, b, c, d);
      return report;
    }
  }
  return report;
}

}  // namespace xmodlab
