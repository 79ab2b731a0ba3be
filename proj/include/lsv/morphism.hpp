#ifndef LSV_MORPHISM_HPP
#define LSV_MORPHISM_HPP

#include <vector>

#include "lsv/series.hpp"

namespace lsv {

// A graded algebra morphism between two free tensor algebras, given by one
// target series per source generator, extended multiplicatively on words
// and linearly on series. Construction rejects degree-violating images:
// each image must be homogeneous of its generator's degree (the zero series
// qualifies for any degree).
class AlgebraMorphism {
 public:
  AlgebraMorphism(AlphabetPtr source, AlphabetPtr target,
                  std::vector<Series> images);

  const AlphabetPtr& source() const { return source_; }
  const AlphabetPtr& target() const { return target_; }
  const Series& image(Letter g) const { return images_[g]; }

  Series operator()(const Series& s) const;

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  std::vector<Series> images_;
};

// Multiplicative-linear extension; result order = order(s).
Series morph(const AlgebraMorphism& f, const Series& s);

// Identity on `alphabet` at the given order.
AlgebraMorphism identity_morphism(AlphabetPtr alphabet, int order);

// g followed by f (i.e. s |-> f(g(s))); requires target(g) == source(f).
AlgebraMorphism compose(const AlgebraMorphism& f, const AlgebraMorphism& g);

}  // namespace lsv

#endif
