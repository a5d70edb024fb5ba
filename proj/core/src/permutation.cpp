#include "xmodlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "xmodlab/errors.hpp"

namespace xmodlab {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      throw DegreeMismatch("image array is not a bijection");
    seen[x] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (Point x : cycle) {
      if (x < 1 || x > degree)
        throw DegreeMismatch("point " + std::to_string(x) +
                             " outside degree " + std::to_string(degree));
      if (used[x - 1])
        throw DegreeMismatch("point " + std::to_string(x) +
                             " repeated in cycle notation");
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation r = *this;
  r *= rhs;
  return r;
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  if (rhs.degree() != degree())
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(degree()) + " and " +
                         std::to_string(rhs.degree()));
  if (&rhs == this) {
    std::vector<Point> old = images_;
    for (auto& x : images_) x = old[x];
    return *this;
  }
  for (auto& x : images_) x = rhs.images_[x];
  return *this;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (Point x = 0; x < degree(); ++x) r.images_[images_[x]] = x;
  return r;
}

Permutation Permutation::power(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? 0ULL - static_cast<unsigned long long>(k)
                               : static_cast<unsigned long long>(k);
  Permutation result(degree());
  while (e) {
    if (e & 1ULL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Permutation Permutation::conjugate(const Permutation& by) const {
  return by.inverse() * *this * by;
}

bool Permutation::is_identity() const noexcept {
  for (Point x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(degree(), false);
  for (Point x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Point Permutation::first_moved_point() const noexcept {
  for (Point x = 0; x < degree(); ++x)
    if (images_[x] != x) return x;
  return static_cast<Point>(degree());
}

Permutation Permutation::extended(std::size_t degree) const {
  return shifted(0, degree);
}

Permutation Permutation::shifted(Point offset, std::size_t degree) const {
  if (offset + this->degree() > degree)
    throw DegreeMismatch("shifted permutation does not fit in degree " +
                         std::to_string(degree));
  Permutation r(degree);
  for (Point x = 0; x < this->degree(); ++x)
    r.images_[x + offset] = images_[x] + offset;
  return r;
}

Permutation Permutation::restricted(Point begin, std::size_t count) const {
  std::vector<Point> images(count);
  for (Point x = 0; x < count; ++x) {
    Point y = images_[begin + x];
    if (y < begin || y >= begin + count)
      throw DegreeMismatch("restriction to a non-invariant block");
    images[x] = y - begin;
  }
  return from_images(std::move(images));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (Point x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    any = true;
    os << '(';
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (y != x) os << ',';
      os << (y + 1);
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_string();
}

std::string to_string(const std::vector<Permutation>& perms) {
  std::string out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (i) out += ',';
    out += perms[i].to_string();
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image array
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

using Cycles = std::vector<std::vector<Point>>;

class CycleParser {
 public:
  explicit CycleParser(std::string_view text) : text_(text) {}

  std::vector<Cycles> parse_list() {
    std::vector<Cycles> result;
    skip_ws();
    if (at_end()) return result;
    result.push_back(parse_cycles());
    skip_ws();
    while (!at_end()) {
      expect(',');
      result.push_back(parse_cycles());
      skip_ws();
    }
    return result;
  }

  Cycles parse_single() {
    Cycles c = parse_cycles();
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
    return c;
  }

  Point max_point() const { return max_point_; }

 private:
  Cycles parse_cycles() {
    Cycles cycles;
    skip_ws();
    if (at_end() || peek() != '(') fail("expected '('");
    while (!at_end() && peek() == '(') {
      ++pos_;
      std::vector<Point> cycle;
      skip_ws();
      if (!at_end() && peek() == ')') {
        ++pos_;
      } else {
        cycle.push_back(parse_point());
        skip_ws();
        while (!at_end() && peek() == ',') {
          ++pos_;
          cycle.push_back(parse_point());
          skip_ws();
        }
        expect(')');
      }
      if (cycle.size() > 1) cycles.push_back(std::move(cycle));
      skip_ws();
    }
    return cycles;
  }

  Point parse_point() {
    skip_ws();
    std::size_t start = pos_;
    unsigned long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned>(peek() - '0');
      if (value > 1'000'000) fail("point out of range");
      ++pos_;
    }
    if (pos_ == start) fail("expected a point number");
    if (value == 0) {
      pos_ = start;
      fail("points are 1-based");
    }
    max_point_ = std::max<Point>(max_point_, static_cast<Point>(value));
    return static_cast<Point>(value);
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("malformed permutation: " + what, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Point max_point_ = 0;
};

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  CycleParser parser(text);
  Cycles cycles = parser.parse_single();
  if (degree == 0) degree = std::max<std::size_t>(parser.max_point(), 1);
  return Permutation::from_cycles(degree, cycles);
}

std::vector<Permutation> parse_permutation_list(std::string_view text,
                                                std::size_t degree) {
  CycleParser parser(text);
  std::vector<Cycles> list = parser.parse_list();
  if (degree == 0) degree = std::max<std::size_t>(parser.max_point(), 1);
  std::vector<Permutation> result;
  result.reserve(list.size());
  for (const auto& cycles : list)
    result.push_back(Permutation::from_cycles(degree, cycles));
  return result;
}

}  // namespace xmodlab
