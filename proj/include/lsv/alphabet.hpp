#ifndef LSV_ALPHABET_HPP
#define LSV_ALPHABET_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lsv {

using Letter = std::uint8_t;

struct Generator {
  std::string name;
  int degree = 0;

  bool operator==(const Generator&) const = default;
};

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

// An ordered list of named, graded generators. The construction order is
// fixed and defines the canonical (length, then lexicographic-by-index)
// ordering of words. Alphabets are immutable and shared by pointer;
// equality is structural, so independently built copies are compatible.
class Alphabet {
 public:
  static AlphabetPtr make(std::vector<Generator> generators);

  std::size_t size() const { return generators_.size(); }
  const Generator& generator(Letter i) const { return generators_[i]; }
  const std::string& name(Letter i) const { return generators_[i].name; }
  int degree(Letter i) const { return generators_[i].degree; }

  std::optional<Letter> find(std::string_view name) const;
  // Same as find() but throws std::invalid_argument for unknown names.
  Letter letter(std::string_view name) const;

  bool operator==(const Alphabet& other) const {
    return generators_ == other.generators_;
  }

 private:
  explicit Alphabet(std::vector<Generator> generators);

  std::vector<Generator> generators_;
};

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

// A basis word of the tensor algebra: a (possibly empty) sequence of
// generator indices. Comparison is length-first, then lexicographic, which
// is the canonical term order everywhere in this project; std::map<Word, .>
// therefore iterates in display order for free.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  static Word single(Letter g) { return Word(std::string(1, char(g))); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return Letter(letters_[i]); }

  Word operator+(const Word& other) const { return Word(letters_ + other.letters_); }
  Word prefix(std::size_t n) const { return Word(letters_.substr(0, n)); }
  Word suffix_from(std::size_t i) const { return Word(letters_.substr(i)); }

  std::size_t count(Letter g) const;
  int degree(const Alphabet& alphabet) const;

  bool operator==(const Word&) const = default;
  std::strong_ordering operator<=>(const Word& other) const {
    if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
    return letters_.compare(other.letters_) <=> 0;
  }

  const std::string& letters() const { return letters_; }

 private:
  std::string letters_;
};

// Repeated single letter g^n.
Word word_power(Letter g, std::size_t n);

// "g1⊗g2⊗…" with the empty word rendered as "1".
std::string word_text(const Alphabet& alphabet, const Word& w);

}  // namespace lsv

#endif
