#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "xmodlab/smith.hpp"

namespace xmodlab {

struct Letter {
  std::uint32_t generator;
  std::int8_t exponent;  ///< +1 or -1

  /// Column index in a coset table: 2*generator, +1 for inverses.
  std::uint32_t column() const noexcept {
    return 2 * generator + (exponent < 0 ? 1u : 0u);
  }
  Letter inverse() const noexcept {
    return {generator, static_cast<std::int8_t>(-exponent)};
  }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the free group, always kept freely reduced.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  static Word generator(std::uint32_t g, int exponent = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word operator*(const Word& rhs) const;
  Word inverse() const;
  /// this^k, k may be negative.
  Word power(int k) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  void append_reduced(const Letter& l);
  std::vector<Letter> letters_;
};

/// Commutator a^-1 b^-1 a b.
Word commutator(const Word& a, const Word& b);

/**
 * A finite presentation. Relators are stored freely reduced; empty relators
 * are dropped. Generator labels are unique; unlabelled presentations get
 * "x0", "x1", ... labels.
 */
class Presentation {
 public:
  Presentation(std::size_t generator_count, std::vector<Word> relators);
  Presentation(std::vector<std::string> labels, std::vector<Word> relators);

  std::size_t generator_count() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  /// Exponent-sum matrix, one row per relator.
  IntMatrix relation_matrix() const;

  /// Parses a word written with this presentation's labels.
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;

  nlohmann::ordered_json to_json() const;
  /// {"generators": [...], "relators": ["a^2", "a b a^-1 b^-1", ...]}.
  static Presentation from_json(const nlohmann::json& j);

 private:
  std::vector<std::string> labels_;
  std::vector<Word> relators_;
};

/**
 * Parses a word over the given labels. Tokens are labels separated by
 * whitespace or '*', each optionally followed by ^k (k an integer). When
 * every label is a single lower-case letter, an upper-case letter denotes
 * the inverse and letters may be run together ("abAB").
 */
Word parse_word(std::string_view text, const std::vector<std::string>& labels);

/// Invariant factors of the abelianization: nontrivial factors ascending,
/// followed by one 0 per free generator of the free-abelian part.
std::vector<std::int64_t> abelianization(const Presentation& pres);

}  // namespace xmodlab
