#include "lsv/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsv {

Alphabet::Alphabet(std::vector<Generator> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty())
    throw std::invalid_argument("alphabet must be nonempty");
  if (generators_.size() > 256)
    throw std::invalid_argument("alphabet too large");
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i].name == generators_[j].name)
        throw std::invalid_argument("duplicate generator name: " +
                                    generators_[i].name);
}

AlphabetPtr Alphabet::make(std::vector<Generator> generators) {
  return AlphabetPtr(new Alphabet(std::move(generators)));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return Letter(i);
  return std::nullopt;
}

Letter Alphabet::letter(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw std::invalid_argument("unknown generator: " + std::string(name));
}

std::size_t Word::count(Letter g) const {
  return std::size_t(std::count(letters_.begin(), letters_.end(), char(g)));
}

int Word::degree(const Alphabet& alphabet) const {
  int d = 0;
  for (char c : letters_) d += alphabet.degree(Letter(c));
  return d;
}

Word word_power(Letter g, std::size_t n) {
  return Word(std::string(n, char(g)));
}

std::string word_text(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "⊗";
    out += alphabet.name(w[i]);
  }
  return out;
}

}  // namespace lsv
