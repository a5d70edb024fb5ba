#include "xmodlab/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include <boost/integer/common_factor.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "xmodlab/errors.hpp"

namespace xmodlab {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ArithmeticOverflow("integer overflow in Smith normal form");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw ArithmeticOverflow("integer overflow in Smith normal form");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw ArithmeticOverflow("integer overflow in Smith normal form");
  return r;
}

std::int64_t checked_abs(std::int64_t a) {
  if (a == INT64_MIN) throw ArithmeticOverflow("integer overflow in Smith normal form");
  return a < 0 ? -a : a;
}

// Exact integer arithmetic over either int64 with overflow checks or an
// unbounded integer.
struct Checked {
  using Int = std::int64_t;
  static Int mul(Int a, Int b) { return checked_mul(a, b); }
  static Int add(Int a, Int b) { return checked_add(a, b); }
  static Int sub(Int a, Int b) { return checked_sub(a, b); }
  static Int abs(Int a) { return checked_abs(a); }
};

struct Big {
  using Int = boost::multiprecision::cpp_int;
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int add(const Int& a, const Int& b) { return a + b; }
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }
};

template <class A>
using Matrix = std::vector<std::vector<typename A::Int>>;

template <class A>
struct Egcd {
  typename A::Int g, x, y;  // g = x a + y b, g > 0
};

template <class A>
Egcd<A> egcd(typename A::Int a, typename A::Int b) {
  using Int = typename A::Int;
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = A::sub(a, A::mul(q, b));
    a = b;
    b = r;
    Int nx = A::sub(x0, A::mul(q, x1));
    Int ny = A::sub(y0, A::mul(q, y1));
    x0 = x1;
    y0 = y1;
    x1 = nx;
    y1 = ny;
  }
  if (a < 0) return {A::abs(a), A::sub(0, x0), A::sub(0, y0)};
  return {a, x0, y0};
}

// Makes m[i][c] zero by a unimodular operation on rows t and i, leaving
// gcd(m[t][c], m[i][c]) at (t, c).
template <class A>
void row_gcd(Matrix<A>& m, std::size_t t, std::size_t i, std::size_t c) {
  using Int = typename A::Int;
  if (m[i][c] % m[t][c] == 0) {
    Int q = m[i][c] / m[t][c];
    for (std::size_t j = 0; j < m[t].size(); ++j) m[i][j] = A::sub(m[i][j], A::mul(q, m[t][j]));
    return;
  }
  Egcd<A> e = egcd<A>(m[t][c], m[i][c]);
  Int a = m[t][c] / e.g, b = m[i][c] / e.g;
  for (std::size_t j = 0; j < m[t].size(); ++j) {
    Int u = m[t][j], v = m[i][j];
    m[t][j] = A::add(A::mul(e.x, u), A::mul(e.y, v));
    m[i][j] = A::sub(A::mul(a, v), A::mul(b, u));
  }
}

template <class A>
void col_gcd(Matrix<A>& m, std::size_t t, std::size_t j, std::size_t r) {
  using Int = typename A::Int;
  if (m[r][j] % m[r][t] == 0) {
    Int q = m[r][j] / m[r][t];
    for (auto& row : m) row[j] = A::sub(row[j], A::mul(q, row[t]));
    return;
  }
  Egcd<A> e = egcd<A>(m[r][t], m[r][j]);
  Int a = m[r][t] / e.g, b = m[r][j] / e.g;
  for (auto& row : m) {
    Int u = row[t], v = row[j];
    row[t] = A::add(A::mul(e.x, u), A::mul(e.y, v));
    row[j] = A::sub(A::mul(a, v), A::mul(b, u));
  }
}

// Diagonalises `m` in place; returns the number of nonzero pivots.
template <class A>
std::size_t diagonalise(Matrix<A>& m, std::size_t rows, std::size_t cols) {
  using Int = typename A::Int;
  const std::size_t diag = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < diag; ++t) {
    // Smallest nonzero entry of the remaining block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || A::abs(m[i][j]) < best)) {
          best = A::abs(m[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);

    bool done = false;
    while (!done) {
      done = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (m[i][t] != 0) row_gcd<A>(m, t, i, t);
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m[t][j] != 0) {
          col_gcd<A>(m, t, j, t);
          done = false;
        }
      if (!done) continue;
      // The pivot must divide the whole remaining block.
      for (std::size_t i = t + 1; i < rows && done; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = 0; k < cols; ++k) m[t][k] = A::add(m[t][k], m[i][k]);
            done = false;
            break;
          }
    }
  }
  return t;
}

// The pivots as a divisibility chain with zeros last.
template <class A>
std::vector<typename A::Int> invariant_chain(const Matrix<A>& m, std::size_t pivots,
                                             std::size_t diag) {
  using Int = typename A::Int;
  std::vector<Int> result(diag, 0);
  for (std::size_t i = 0; i < pivots; ++i) result[i] = A::abs(m[i][i]);
  for (std::size_t i = 0; i < pivots; ++i)
    for (std::size_t j = i + 1; j < pivots; ++j) {
      Int g = boost::integer::gcd(result[i], result[j]);
      Int l = A::mul(result[i] / g, result[j]);
      result[i] = g;
      result[j] = l;
    }
  return result;
}

}  // namespace

std::vector<std::int64_t> smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != cols) throw DegreeMismatch("ragged integer matrix");
  const std::size_t diag = std::min(rows, cols);

  Matrix<Big> big;
  big.reserve(rows);
  for (const auto& row : m) big.emplace_back(row.begin(), row.end());
  try {
    std::size_t pivots = diagonalise<Checked>(m, rows, cols);
    return invariant_chain<Checked>(m, pivots, diag);
  } catch (const ArithmeticOverflow&) {
    // Intermediate entries outgrew 64 bits; redo the elimination exactly.
  }
  std::size_t pivots = diagonalise<Big>(big, rows, cols);
  std::vector<std::int64_t> out;
  for (const auto& d : invariant_chain<Big>(big, pivots, diag)) {
    if (d > std::numeric_limits<std::int64_t>::max())
      throw ArithmeticOverflow("invariant factor exceeds 64 bits");
    out.push_back(static_cast<std::int64_t>(d));
  }
  return out;
}

IntMatrix hermite_basis(const IntMatrix& rows, std::size_t width) {
  // basis[c] holds the row whose leading entry sits in column c, if any.
  std::vector<std::vector<std::int64_t>> basis(width);

  auto reduce_above = [&](std::size_t c) {
    const auto& pivot_row = basis[c];
    for (std::size_t r = 0; r < c; ++r) {
      if (basis[r].empty()) continue;
      std::int64_t q = basis[r][c] / pivot_row[c];
      if (basis[r][c] - q * pivot_row[c] < 0) --q;
      if (q == 0) continue;
      for (std::size_t k = c; k < width; ++k)
        basis[r][k] = checked_sub(basis[r][k], checked_mul(q, pivot_row[k]));
    }
  };

  // Reduces the entries of basis[r] right of its pivot modulo the pivots
  // below them.
  auto reduce_row = [&](std::size_t r) {
    for (std::size_t c = r + 1; c < width; ++c) {
      if (basis[c].empty()) continue;
      std::int64_t q = basis[r][c] / basis[c][c];
      if (basis[r][c] - q * basis[c][c] < 0) --q;
      if (q == 0) continue;
      for (std::size_t k = c; k < width; ++k)
        basis[r][k] = checked_sub(basis[r][k], checked_mul(q, basis[c][k]));
    }
  };

  for (const auto& input : rows) {
    if (input.size() != width) throw DegreeMismatch("ragged integer matrix");
    std::vector<std::int64_t> row = input;
    for (std::size_t c = 0; c < width; ++c) {
      if (row[c] == 0) continue;
      if (basis[c].empty()) {
        if (row[c] < 0)
          for (auto& x : row) x = checked_sub(0, x);
        basis[c] = std::move(row);
        reduce_row(c);
        reduce_above(c);
        break;
      }
      // Unimodular combination of basis[c] and row clearing row[c].
      std::vector<std::int64_t>& b = basis[c];
      std::int64_t a0 = b[c], a1 = row[c];
      // extended gcd: x*a0 + y*a1 = g
      std::int64_t old_r = a0, r = a1, old_s = 1, s = 0, old_t = 0, tt = 1;
      while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = tmp;
        tmp = checked_sub(old_s, checked_mul(q, s));
        old_s = s;
        s = tmp;
        tmp = checked_sub(old_t, checked_mul(q, tt));
        old_t = tt;
        tt = tmp;
      }
      std::int64_t g = old_r, x = old_s, y = old_t;
      if (g < 0) {
        g = -g;
        x = -x;
        y = -y;
      }
      std::int64_t u = a1 / g, v = a0 / g;
      std::vector<std::int64_t> nb(width), nr(width);
      for (std::size_t k = 0; k < width; ++k) {
        nb[k] = checked_add(checked_mul(x, b[k]), checked_mul(y, row[k]));
        nr[k] = checked_sub(checked_mul(v, row[k]), checked_mul(u, b[k]));
      }
      b = std::move(nb);
      row = std::move(nr);
      reduce_row(c);
      reduce_above(c);
    }
  }

  IntMatrix result;
  for (auto& r : basis)
    if (!r.empty()) result.push_back(std::move(r));
  return result;
}

}  // namespace xmodlab
