#include "xmodlab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "xmodlab/errors.hpp"

namespace xmodlab {

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) append_reduced(l);
}

Word Word::generator(std::uint32_t g, int exponent) {
  Word w;
  Letter l{g, static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
  for (int i = 0; i < std::abs(exponent); ++i) w.append_reduced(l);
  return w;
}

void Word::append_reduced(const Letter& l) {
  if (l.exponent != 1 && l.exponent != -1)
    throw ParseError("letter exponents must be +1 or -1", 0);
  if (!letters_.empty() && letters_.back() == l.inverse())
    letters_.pop_back();
  else
    letters_.push_back(l);
}

Word Word::operator*(const Word& rhs) const {
  Word r = *this;
  for (const auto& l : rhs.letters_) r.append_reduced(l);
  return r;
}

Word Word::inverse() const {
  Word r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.letters_.push_back(it->inverse());
  return r;
}

Word Word::power(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word r;
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

Word commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return labels;
}

bool single_letter_labels(const std::vector<std::string>& labels) {
  return std::all_of(labels.begin(), labels.end(), [](const std::string& s) {
    return s.size() == 1 && std::islower(static_cast<unsigned char>(s[0]));
  });
}

class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<std::string>& labels)
      : text_(text), labels_(labels), compact_(single_letter_labels(labels)) {}

  Word parse() {
    Word w = parse_sequence();
    skip_separators();
    if (pos_ < text_.size()) fail("unexpected character");
    return w;
  }

 private:
  Word parse_sequence() {
    Word w;
    while (true) {
      skip_separators();
      if (pos_ >= text_.size() || text_[pos_] == ')') return w;
      w = w * parse_factor();
    }
  }

  Word parse_factor() {
    Word prefix;
    Word atom;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      atom = parse_sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
    } else if (c == '1') {
      ++pos_;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view ident = text_.substr(start, pos_ - start);
      if (auto g = lookup(ident)) {
        atom = Word::generator(*g);
      } else if (compact_) {
        for (std::size_t i = 0; i < ident.size(); ++i) {
          Word letter = compact_letter(ident[i], start + i);
          if (i + 1 < ident.size())
            prefix = prefix * letter;
          else
            atom = letter;
        }
      } else {
        pos_ = start;
        fail("unknown generator '" + std::string(ident) + "'");
      }
    } else {
      fail("unexpected character");
    }
    skip_spaces();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_spaces();
      atom = atom.power(parse_int());
    }
    return prefix * atom;
  }

  Word compact_letter(char c, std::size_t at) {
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto g = lookup(std::string_view(&lower, 1));
    if (!g) {
      pos_ = at;
      fail(std::string("unknown generator '") + c + "'");
    }
    return Word::generator(*g, std::isupper(static_cast<unsigned char>(c)) ? -1 : 1);
  }

  int parse_int() {
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 100000) fail("exponent too large");
      ++pos_;
    }
    if (start == pos_) fail("expected an integer exponent");
    return static_cast<int>(negative ? -value : value);
  }

  std::optional<std::uint32_t> lookup(std::string_view ident) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == ident) return static_cast<std::uint32_t>(i);
    return std::nullopt;
  }

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void skip_separators() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*'))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("malformed word: " + what, pos_);
  }

  std::string_view text_;
  const std::vector<std::string>& labels_;
  bool compact_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& labels) {
  return WordParser(text, labels).parse();
}

Presentation::Presentation(std::size_t generator_count, std::vector<Word> relators)
    : Presentation(default_labels(generator_count), std::move(relators)) {}

Presentation::Presentation(std::vector<std::string> labels, std::vector<Word> relators)
    : labels_(std::move(labels)) {
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw ParseError("duplicate generator label '" + l + "'", 0);
  for (auto& r : relators) {
    for (const auto& l : r.letters())
      if (l.generator >= labels_.size())
        throw DegreeMismatch("relator mentions generator " +
                             std::to_string(l.generator) + " of " +
                             std::to_string(labels_.size()));
    if (!r.empty()) relators_.push_back(std::move(r));
  }
}

IntMatrix Presentation::relation_matrix() const {
  IntMatrix m;
  for (const auto& r : relators_) {
    std::vector<std::int64_t> row(generator_count(), 0);
    for (const auto& l : r.letters()) row[l.generator] += l.exponent;
    m.push_back(std::move(row));
  }
  return m;
}

Word Presentation::parse_word(std::string_view text) const {
  return xmodlab::parse_word(text, labels_);
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    if (!out.empty()) out += ' ';
    out += labels_[ls[i].generator];
    long power = static_cast<long>(j - i) * ls[i].exponent;
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

nlohmann::ordered_json Presentation::to_json() const {
  nlohmann::ordered_json j;
  j["generators"] = labels_;
  auto rels = nlohmann::ordered_json::array();
  for (const auto& r : relators_) rels.push_back(format_word(r));
  j["relators"] = std::move(rels);
  return j;
}

Presentation Presentation::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("relators"))
    throw ParseError("presentation JSON needs 'generators' and 'relators'", 0);
  std::vector<std::string> labels = j.at("generators").get<std::vector<std::string>>();
  std::vector<Word> relators;
  for (const auto& r : j.at("relators")) relators.push_back(xmodlab::parse_word(r.get<std::string>(), labels));
  return Presentation(std::move(labels), std::move(relators));
}

std::vector<std::int64_t> abelianization(const Presentation& pres) {
  const std::size_t k = pres.generator_count();
  IntMatrix m = pres.relation_matrix();
  std::vector<std::int64_t> diag = m.empty() ? std::vector<std::int64_t>{} : smith_normal_form(m);
  diag.resize(k, 0);
  std::vector<std::int64_t> result;
  std::size_t free_rank = 0;
  for (auto d : diag) {
    if (d == 0)
      ++free_rank;
    else if (d != 1)
      result.push_back(d);
  }
  std::sort(result.begin(), result.end());
  result.insert(result.end(), free_rank, 0);
  return result;
}

}  // namespace xmodlab
