#include "lsv/morphism.hpp"

#include <stdexcept>

namespace lsv {

namespace {

void accumulate(std::map<Word, Rational>& acc, Word w, Rational c) {
  auto [it, inserted] = acc.try_emplace(std::move(w), std::move(c));
  if (!inserted) it->second += c;
}

}  // namespace

AlgebraMorphism::AlgebraMorphism(AlphabetPtr source, AlphabetPtr target,
                                 std::vector<Series> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (!source_ || !target_) throw std::invalid_argument("null alphabet");
  if (images_.size() != source_->size())
    throw std::invalid_argument("morphism needs one image per generator");
  for (std::size_t g = 0; g < images_.size(); ++g) {
    const Series& image = images_[g];
    if (!same_alphabet(image.alphabet(), target_))
      throw std::invalid_argument("morphism image over a different alphabet");
    if (!image.is_homogeneous_of(source_->degree(Letter(g))))
      throw std::invalid_argument(
          "degree-violating image for generator " + source_->name(Letter(g)));
  }
}

Series AlgebraMorphism::operator()(const Series& s) const {
  return morph(*this, s);
}

Series morph(const AlgebraMorphism& f, const Series& s) {
  if (!same_alphabet(f.source(), s.alphabet()))
    throw std::invalid_argument("morph: alphabet mismatch");
  int order = s.order();
  for (std::size_t g = 0; g < f.source()->size(); ++g)
    if (f.image(Letter(g)).order() < order)
      throw std::invalid_argument(
          "morph: input order exceeds the order of the materialized images");

  std::map<Word, Rational> acc;
  for (const auto& [w, c] : s.terms()) {
    Series value = Series::unit(f.target(), order);
    for (std::size_t i = 0; i < w.size() && !value.is_zero(); ++i)
      value = product(value, f.image(w[i]));
    for (const auto& [v, cv] : value.terms()) accumulate(acc, v, c * cv);
  }
  return Series::from_terms(f.target(), order, std::move(acc));
}

AlgebraMorphism identity_morphism(AlphabetPtr alphabet, int order) {
  std::vector<Series> images;
  images.reserve(alphabet->size());
  for (std::size_t g = 0; g < alphabet->size(); ++g)
    images.push_back(Series::generator(alphabet, order, Letter(g)));
  return AlgebraMorphism(alphabet, alphabet, std::move(images));
}

AlgebraMorphism compose(const AlgebraMorphism& f, const AlgebraMorphism& g) {
  if (!same_alphabet(g.target(), f.source()))
    throw std::invalid_argument("compose: alphabet mismatch");
  std::vector<Series> images;
  images.reserve(g.source()->size());
  for (std::size_t i = 0; i < g.source()->size(); ++i)
    images.push_back(morph(f, g.image(Letter(i))));
  return AlgebraMorphism(g.source(), f.target(), std::move(images));
}

}  // namespace lsv
