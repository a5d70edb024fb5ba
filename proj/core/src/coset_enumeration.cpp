#include "xmodlab/coset_enumeration.hpp"

#include <algorithm>

#include "xmodlab/errors.hpp"

namespace xmodlab {

class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& pres, const std::vector<Word>& subgroup,
                  std::size_t max_cosets)
      : result_(pres, subgroup),
        cols_(2 * pres.generator_count()),
        cap_(max_cosets) {
    if (max_cosets < 1) throw CosetLimitExceeded("max_cosets must be at least 1");
    for (const auto& r : pres.relators()) relators_.push_back(columns(r));
    for (const auto& w : subgroup) subgroup_.push_back(columns(w));
  }

  CosetTable run() {
    new_row();
    for (const auto& w : subgroup_) {
      std::size_t alpha = 0;
      make_room(alpha, w.size());
      scan(0, w, true);
    }

    std::size_t alpha = 0;
    while (alpha < rows_) {
      if (!alive(alpha)) {
        ++alpha;
        continue;
      }
      bool restart = false;
      for (const auto& r : relators_) {
        if (make_room(alpha, r.size())) {
          restart = true;
          break;
        }
        if (!alive(alpha)) break;
        scan(static_cast<std::uint32_t>(alpha), r, true);
      }
      if (restart) continue;
      for (std::size_t c = 0; c < cols_ && alive(alpha); ++c) {
        if (at(alpha, c) != kU) continue;
        if (make_room(alpha, 1)) {
          restart = true;
          break;
        }
        define(static_cast<std::uint32_t>(alpha), c);
      }
      if (restart) continue;
      ++alpha;
    }

    compact(alpha);
    result_.rows_ = rows_;
    result_.table_.assign(table_.begin(), table_.begin() + static_cast<long>(rows_ * cols_));
    result_.complete_ = std::none_of(result_.table_.begin(), result_.table_.end(),
                                     [](std::uint32_t x) { return x == kU; });
    result_.total_defined_ = total_defined_;
    result_.max_live_ = max_live_;
    return std::move(result_);
  }

 private:
  static constexpr std::uint32_t kU = CosetTable::kUndefined;

  static std::vector<std::uint32_t> columns(const Word& w) {
    std::vector<std::uint32_t> cs;
    for (const auto& l : w.letters()) cs.push_back(l.column());
    return cs;
  }

  std::uint32_t& at(std::size_t c, std::size_t col) { return table_[c * cols_ + col]; }
  bool alive(std::size_t c) const { return parent_[c] == c; }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::uint32_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  std::uint32_t new_row() {
    auto c = static_cast<std::uint32_t>(rows_++);
    table_.resize(rows_ * cols_, kU);
    parent_.push_back(c);
    ++live_;
    ++total_defined_;
    max_live_ = std::max(max_live_, live_);
    return c;
  }

  void define(std::uint32_t c, std::size_t col) {
    std::uint32_t n = new_row();
    at(c, col) = n;
    at(n, col ^ 1) = c;
  }

  // Traces `w` around coset `alpha` from both ends. With `fill`, missing
  // entries are defined; otherwise the scan only records deductions and
  // coincidences.
  void scan(std::uint32_t alpha, const std::vector<std::uint32_t>& w, bool fill) {
    std::uint32_t f = alpha, b = alpha;
    std::size_t i = 0, j = w.size();
    while (true) {
      while (i < j && at(f, w[i]) != kU) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, w[j - 1] ^ 1) != kU) b = at(b, w[--j] ^ 1);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1) = f;
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void merge(std::uint32_t k, std::uint32_t l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    std::uint32_t lo = std::min(k, l), hi = std::max(k, l);
    parent_[hi] = lo;
    --live_;
    queue_.push_back(hi);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t k = 0; k < queue_.size(); ++k) {
      std::uint32_t e = queue_[k];
      for (std::size_t col = 0; col < cols_; ++col) {
        std::uint32_t d = at(e, col);
        if (d == kU) continue;
        at(d, col ^ 1) = kU;
        std::uint32_t mu = rep(e), nu = rep(d);
        if (at(mu, col) != kU) {
          merge(nu, at(mu, col));
        } else if (at(nu, col ^ 1) != kU) {
          merge(mu, at(nu, col ^ 1));
        } else {
          at(mu, col) = nu;
          at(nu, col ^ 1) = mu;
        }
      }
    }
  }

  // Renumbers live cosets consecutively, keeping their order. `alpha` moves
  // to the first live coset at or after its old position.
  void compact(std::size_t& alpha) {
    std::vector<std::uint32_t> renumber(rows_, kU);
    std::uint32_t next = 0;
    std::size_t new_alpha = rows_;
    for (std::size_t c = 0; c < rows_; ++c) {
      if (!alive(c)) continue;
      if (c >= alpha && new_alpha == rows_) new_alpha = next;
      renumber[c] = next++;
    }
    std::vector<std::uint32_t> table(next * cols_, kU);
    for (std::size_t c = 0; c < rows_; ++c) {
      if (!alive(c)) continue;
      for (std::size_t col = 0; col < cols_; ++col) {
        std::uint32_t d = at(c, col);
        if (d != kU) table[renumber[c] * cols_ + col] = renumber[rep(d)];
      }
    }
    alpha = new_alpha == rows_ ? next : new_alpha;
    table_ = std::move(table);
    rows_ = next;
    parent_.resize(rows_);
    for (std::uint32_t c = 0; c < rows_; ++c) parent_[c] = c;
  }

  void lookahead() {
    for (const auto& w : subgroup_)
      if (alive(0)) scan(0, w, false);
    for (std::size_t c = 0; c < rows_; ++c)
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        scan(static_cast<std::uint32_t>(c), r, false);
      }
  }

  // Ensures `need` more rows fit. Returns true if the coset that `alpha`
  // referred to died, in which case processing restarts at the new alpha.
  bool make_room(std::size_t& alpha, std::size_t need) {
    if (rows_ + need <= cap_) return false;
    bool lost = !alive(alpha);
    compact(alpha);
    if (rows_ + need <= cap_) return lost;
    lookahead();
    lost = lost || (alpha < rows_ && !alive(alpha));
    compact(alpha);
    if (rows_ + need > cap_)
      throw CosetLimitExceeded("coset enumeration exceeded " + std::to_string(cap_) +
                               " cosets (" + std::to_string(live_) + " live)");
    return lost;
  }

  CosetTable result_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::vector<std::vector<std::uint32_t>> subgroup_;
  std::size_t cols_;
  std::size_t cap_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> queue_;
  std::size_t rows_ = 0;
  std::size_t live_ = 0;
  std::size_t total_defined_ = 0;
  std::size_t max_live_ = 0;
};

std::uint32_t CosetTable::trace(std::size_t coset, const Word& w) const {
  std::uint32_t c = static_cast<std::uint32_t>(coset);
  for (const auto& l : w.letters()) {
    c = entry(c, l.column());
    if (c == kUndefined) return kUndefined;
  }
  return c;
}

CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup,
                        std::size_t max_cosets) {
  return CosetEnumerator(pres, subgroup, max_cosets).run();
}

PermutationRep perm_rep(const CosetTable& table) {
  if (!table.complete()) throw IncompleteTable("coset table is not complete");
  const std::size_t n = table.coset_count();
  std::vector<Permutation> images;
  for (std::size_t g = 0; g < table.presentation().generator_count(); ++g) {
    std::vector<Point> img(n);
    for (std::size_t c = 0; c < n; ++c) img[c] = table.entry(c, 2 * g);
    images.push_back(Permutation::from_images(std::move(img)));
  }
  PermGroup group(n, images);
  return PermutationRep{std::move(group), std::move(images)};
}

}  // namespace xmodlab
