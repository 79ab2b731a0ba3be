#include "lsv/models.hpp"

#include <stdexcept>

#include "lsv/bernoulli.hpp"
#include "lsv/gauge.hpp"

namespace lsv {

CheckOutcome residual_outcome(const std::string& where, const Series& residual) {
  if (residual.is_zero()) return CheckOutcome::ok();
  const auto& [word, coeff] = *residual.terms().begin();
  return CheckOutcome::fail(
      {where + " @ " + word_text(*residual.alphabet(), word), "0",
       to_string(coeff)});
}

DifferentialModel::DifferentialModel(std::string name_, std::string kind_,
                                     AlphabetPtr alphabet_, int order_,
                                     Derivation differential_)
    : name(std::move(name_)),
      kind(std::move(kind_)),
      alphabet(std::move(alphabet_)),
      order(order_),
      differential(std::move(differential_)) {
  if (order < 1) throw std::invalid_argument("model order must be positive");
  if (!same_alphabet(differential.alphabet(), alphabet))
    throw std::invalid_argument("differential over a different alphabet");
  if (differential.degree() != -1)
    throw std::invalid_argument("model differential must have degree -1");
  if (differential.order() < order)
    throw std::invalid_argument("differential materialized below model order");
  if (!differential.images_homogeneous())
    throw std::invalid_argument("differential image not homogeneous");
}

AlphabetPtr s0_alphabet() {
  static AlphabetPtr alphabet = Alphabet::make({{"u", -1}});
  return alphabet;
}

AlphabetPtr ls_alphabet() {
  static AlphabetPtr alphabet = Alphabet::make({{"a", -1}, {"b", -1}, {"z", 0}});
  return alphabet;
}

AlphabetPtr interval_alphabet() {
  static AlphabetPtr alphabet = Alphabet::make({{"a", -1}, {"z", 0}});
  return alphabet;
}

namespace {

// -g⊗g, the differential of a flat generator (d(g) = -1/2 [g,g] and the odd
// self-bracket doubles).
Series flat_image(const AlphabetPtr& alphabet, int order, Letter g) {
  return Series::monomial(alphabet, order,
                          Word::single(g) + Word::single(g), Rational(-1));
}

// sum_{i>=0} B_i/i! ad_z^i(target); the i-th summand has word length i+1,
// so the sum is exact through the truncation order.
Series bernoulli_ad_series(const Series& z, const Series& target) {
  int order = target.order();
  Series acc(target.alphabet(), order);
  Series iterated = target;
  Rational inv_factorial(1);
  for (int i = 0; i <= order; ++i) {
    if (i > 0) {
      iterated = bracket(z, iterated);
      if (iterated.is_zero()) break;
      inv_factorial /= Rational(i);
    }
    acc += iterated.scaled(bernoulli(std::size_t(i)) * inv_factorial);
  }
  return acc;
}

}  // namespace

DifferentialModel model_s0(int order) {
  if (order < 2) throw std::invalid_argument("model_s0: order must be >= 2");
  AlphabetPtr alphabet = s0_alphabet();
  Derivation d(alphabet, -1, {flat_image(alphabet, order, 0)});
  return DifferentialModel("s0", "lie", alphabet, order, std::move(d));
}

DifferentialModel model_ls(int order) {
  if (order < 2) throw std::invalid_argument("model_ls: order must be >= 2");
  AlphabetPtr alphabet = ls_alphabet();
  Series a = Series::generator(alphabet, order, "a");
  Series b = Series::generator(alphabet, order, "b");
  Series z = Series::generator(alphabet, order, "z");
  Series dz = bracket(z, b) + bernoulli_ad_series(z, b - a);
  Derivation d(alphabet, -1,
               {flat_image(alphabet, order, alphabet->letter("a")),
                flat_image(alphabet, order, alphabet->letter("b")),
                std::move(dz)});
  return DifferentialModel("ls", "lie", alphabet, order, std::move(d));
}

DifferentialModel model_interval(int order) {
  if (order < 2)
    throw std::invalid_argument("model_interval: order must be >= 2");
  AlphabetPtr alphabet = interval_alphabet();
  Series a = Series::generator(alphabet, order, "a");
  Series z = Series::generator(alphabet, order, "z");
  Series dz = -bernoulli_ad_series(z, a);
  Derivation d(alphabet, -1,
               {flat_image(alphabet, order, alphabet->letter("a")),
                std::move(dz)});
  return DifferentialModel("interval", "lie", alphabet, order, std::move(d));
}

Series dz_alternative(int order) {
  AlphabetPtr alphabet = ls_alphabet();
  Series a = Series::generator(alphabet, order, "a");
  Series b = Series::generator(alphabet, order, "b");
  Series z = Series::generator(alphabet, order, "z");
  return bracket(z, b) + op_f_inv(z, b - a);
}

AlgebraMorphism ls_to_interval_quotient(int order) {
  AlphabetPtr src = ls_alphabet();
  AlphabetPtr tgt = interval_alphabet();
  return AlgebraMorphism(src, tgt,
                         {Series::generator(tgt, order, "a"),
                          Series(tgt, order),  // b |-> 0
                          Series::generator(tgt, order, "z")});
}

CheckOutcome d_squared_report(const DifferentialModel& model) {
  for (std::size_t g = 0; g < model.alphabet->size(); ++g) {
    Series residual = derive(model.differential,
                             model.differential.image(Letter(g)));
    auto outcome = residual_outcome(
        "d²(" + model.alphabet->name(Letter(g)) + ")", residual);
    if (!outcome.pass) return outcome;
  }
  return CheckOutcome::ok();
}

CheckOutcome chain_map_check(const AlgebraMorphism& f,
                             const DifferentialModel& src,
                             const DifferentialModel& tgt) {
  if (!same_alphabet(f.source(), src.alphabet) ||
      !same_alphabet(f.target(), tgt.alphabet))
    throw std::invalid_argument("chain_map_check: alphabet mismatch");
  int order = std::min(src.order, tgt.order);
  for (std::size_t g = 0; g < src.alphabet->size(); ++g) {
    Series lhs = morph(f, src.differential.image(Letter(g)).truncated(order));
    Series rhs = derive(tgt.differential, f.image(Letter(g)).truncated(order));
    auto outcome = residual_outcome(
        "f∘d - d∘f (" + src.alphabet->name(Letter(g)) + ")", lhs - rhs);
    if (!outcome.pass) return outcome;
  }
  return CheckOutcome::ok();
}

}  // namespace lsv
