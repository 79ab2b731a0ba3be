#include "lsv/derivation.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace lsv {

namespace {

void accumulate(std::map<Word, Rational>& acc, Word w, Rational c) {
  auto [it, inserted] = acc.try_emplace(std::move(w), std::move(c));
  if (!inserted) it->second += c;
}

// Accumulates D(w)·c into acc for one term (w, c) of the input.
void derive_word(const Derivation& d, const Alphabet& alphabet, int order,
                 const Word& w, const Rational& c,
                 std::map<Word, Rational>& acc) {
  bool d_odd = d.degree() % 2 != 0;
  int prefix_degree = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Series& image = d.image(w[i]);
    bool negate = d_odd && prefix_degree % 2 != 0;
    Word prefix = w.prefix(i);
    Word suffix = w.suffix_from(i + 1);
    std::size_t fixed = w.size() - 1;
    for (const auto& [v, cv] : image.terms()) {
      if (fixed + v.size() > std::size_t(order)) break;  // length-lex sorted
      Rational coeff = c * cv;
      accumulate(acc, prefix + v + suffix, negate ? -coeff : coeff);
    }
    prefix_degree += alphabet.degree(w[i]);
  }
}

}  // namespace

Derivation::Derivation(AlphabetPtr alphabet, int degree,
                       std::vector<Series> images)
    : alphabet_(std::move(alphabet)), degree_(degree), images_(std::move(images)) {
  if (!alphabet_) throw std::invalid_argument("null alphabet");
  if (images_.size() != alphabet_->size())
    throw std::invalid_argument("derivation needs one image per generator");
  order_ = images_.front().order();
  for (const Series& s : images_) {
    if (!same_alphabet(s.alphabet(), alphabet_))
      throw std::invalid_argument("derivation image over a different alphabet");
    order_ = std::min(order_, s.order());
  }
}

bool Derivation::images_homogeneous() const {
  for (std::size_t g = 0; g < images_.size(); ++g)
    if (!images_[g].is_homogeneous_of(alphabet_->degree(Letter(g)) + degree_))
      return false;
  return true;
}

Series Derivation::operator()(const Series& s) const { return derive(*this, s); }

namespace detail {

Series derive_serial(const Derivation& d, const Series& s) {
  const Alphabet& alphabet = *s.alphabet();
  int order = s.order();
  std::map<Word, Rational> acc;
  for (const auto& [w, c] : s.terms())
    derive_word(d, alphabet, order, w, c, acc);
  return Series::from_terms(s.alphabet(), order, std::move(acc));
}

Series derive_parallel(const Derivation& d, const Series& s) {
  const Alphabet& alphabet = *s.alphabet();
  int order = s.order();

  std::vector<const std::pair<const Word, Rational>*> terms;
  terms.reserve(s.term_count());
  for (const auto& term : s.terms()) terms.push_back(&term);

  int chunks = std::max(1, std::min(4 * omp_get_max_threads(),
                                    int(terms.size())));
  std::vector<std::map<Word, Rational>> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
  for (int chunk = 0; chunk < chunks; ++chunk) {
    auto& acc = partial[chunk];
    for (std::size_t i = chunk; i < terms.size(); i += std::size_t(chunks))
      derive_word(d, alphabet, order, terms[i]->first, terms[i]->second, acc);
  }

  std::map<Word, Rational> acc = std::move(partial[0]);
  for (int chunk = 1; chunk < chunks; ++chunk)
    for (auto& [w, c] : partial[chunk]) accumulate(acc, w, std::move(c));
  return Series::from_terms(s.alphabet(), order, std::move(acc));
}

}  // namespace detail

Series derive(const Derivation& d, const Series& s) {
  if (!same_alphabet(d.alphabet(), s.alphabet()))
    throw std::invalid_argument("derive: alphabet mismatch");
  if (s.order() > d.order())
    throw std::invalid_argument(
        "derive: input order exceeds the order of the materialized images");

  bool parallel = s.term_count() >= 256 && omp_get_max_threads() > 1;
  switch (detail::parallel_mode()) {
    case detail::ParallelMode::ForceSerial: parallel = false; break;
    case detail::ParallelMode::ForceParallel: parallel = true; break;
    case detail::ParallelMode::Auto: break;
  }
  return parallel ? detail::derive_parallel(d, s) : detail::derive_serial(d, s);
}

}  // namespace lsv
