#include "lsv/cylinder.hpp"

#include <stdexcept>

#include "lsv/bernoulli.hpp"
#include "lsv/identities.hpp"

namespace lsv {

namespace {

constexpr Letter kU = 0;
constexpr Letter kU1 = 1;  // u'
constexpr Letter kSu = 2;

Series flat_image(const AlphabetPtr& alphabet, int order, Letter g) {
  return Series::monomial(alphabet, order,
                          Word::single(g) + Word::single(g), Rational(-1));
}

}  // namespace

AlphabetPtr cylinder_alphabet() {
  static AlphabetPtr alphabet =
      Alphabet::make({{"u", -1}, {"u'", -1}, {"su", 0}});
  return alphabet;
}

DifferentialModel cyl_classical(int order) {
  if (order < 2)
    throw std::invalid_argument("cyl_classical: order must be >= 2");
  AlphabetPtr alphabet = cylinder_alphabet();
  Series u = Series::generator(alphabet, order, kU);
  Series u1 = Series::generator(alphabet, order, kU1);
  Series su = Series::generator(alphabet, order, kSu);
  Series dsu = u1 - u + product(su, u1) - product(u, su);
  Derivation d(alphabet, -1,
               {flat_image(alphabet, order, kU), flat_image(alphabet, order, kU1),
                std::move(dsu)});
  return DifferentialModel("cyl", "associative", alphabet, order, std::move(d));
}

Series dsu_tail(int order) {
  if (order < 1) throw std::invalid_argument("dsu_tail: order must be >= 1");
  std::map<Word, Rational> acc;
  for (int n = 0; n < order; ++n) {
    Rational bn = bernoulli(std::size_t(n));
    if (is_zero(bn)) continue;
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      Rational c = bn / (factorial(unsigned(p)) * factorial(unsigned(q)));
      if (q % 2 != 0) c = -c;
      Word left = word_power(kSu, std::size_t(p));
      Word right = word_power(kSu, std::size_t(q));
      // su^p (u' - u) su^q
      acc[left + Word::single(kU1) + right] += c;
      acc[left + Word::single(kU) + right] -= c;
    }
  }
  return Series::from_terms(cylinder_alphabet(), order, std::move(acc));
}

DifferentialModel cyl_perturbed(int order) {
  if (order < 2)
    throw std::invalid_argument("cyl_perturbed: order must be >= 2");
  AlphabetPtr alphabet = cylinder_alphabet();
  Series su = Series::generator(alphabet, order, kSu);
  Series u1 = Series::generator(alphabet, order, kU1);
  Series dsu = product(su, u1) - product(u1, su) + dsu_tail(order);
  Derivation d(alphabet, -1,
               {flat_image(alphabet, order, kU), flat_image(alphabet, order, kU1),
                std::move(dsu)});
  return DifferentialModel("cyl-perturbed", "associative", alphabet, order,
                           std::move(d));
}

AlgebraMorphism theorem1_morphism(int order) {
  AlphabetPtr tgt = cylinder_alphabet();
  return AlgebraMorphism(ls_alphabet(), tgt,
                         {Series::generator(tgt, order, kU),
                          Series::generator(tgt, order, kU1),
                          Series::generator(tgt, order, kSu)});
}

CheckOutcome theorem1_check(int order) {
  return chain_map_check(theorem1_morphism(order), model_ls(order),
                         cyl_perturbed(order));
}

AlgebraMorphism cyl_inclusion0(int order) {
  AlphabetPtr tgt = cylinder_alphabet();
  return AlgebraMorphism(s0_alphabet(), tgt,
                         {Series::generator(tgt, order, kU)});
}

AlgebraMorphism cyl_inclusion1(int order) {
  AlphabetPtr tgt = cylinder_alphabet();
  return AlgebraMorphism(s0_alphabet(), tgt,
                         {Series::generator(tgt, order, kU1)});
}

AlgebraMorphism cyl_projection(int order) {
  AlphabetPtr tgt = s0_alphabet();
  Series u = Series::generator(tgt, order, kU);
  return AlgebraMorphism(cylinder_alphabet(), tgt,
                         {u, u, Series(tgt, order)});
}

Series eq2_residual(int order) {
  Series tail = dsu_tail(order);
  DifferentialModel cyl = cyl_perturbed(order);
  Series u1 = Series::generator(cylinder_alphabet(), order, kU1);
  return derive(cyl.differential, tail) + product(tail, u1) + product(u1, tail);
}

Series gamma_residual(int order) {
  if (order < 2)
    throw std::invalid_argument("gamma_residual: order must be >= 2");
  AlphabetPtr alphabet = cylinder_alphabet();
  Series tail = dsu_tail(order);
  Series y = Series::generator(alphabet, order, kU1) -
             Series::generator(alphabet, order, kU);
  Series y2 = product(y, y);

  auto xpow = [&](int k) {
    return Series::monomial(alphabet, order, word_power(kSu, std::size_t(k)),
                            Rational(1));
  };

  Series acc(alphabet, order);
  for (int p = 0; p <= order; ++p) {
    for (int q = 0; p + q <= order; ++q) {
      Rational c = c_coeff(unsigned(p), unsigned(q));
      if (is_zero(c)) continue;
      // x^p y² x^q
      Series gamma = product(product(xpow(p), y2), xpow(q));
      // + sum_{i<p} x^i B x^{p-1-i} y x^q
      for (int i = 0; i < p; ++i)
        gamma += product(
            product(product(product(xpow(i), tail), xpow(p - 1 - i)), y),
            xpow(q));
      // - sum_{i<q} x^p y x^i B x^{q-1-i}
      for (int i = 0; i < q; ++i)
        gamma -= product(
            product(product(product(xpow(p), y), xpow(i)), tail),
            xpow(q - 1 - i));
      acc += gamma.scaled(c);
    }
  }
  return acc;
}

Rational xyyx_coefficient(const Series& s, unsigned p, unsigned q) {
  Word w = word_power(kSu, p) + Word::single(kU) + Word::single(kU) +
           word_power(kSu, q);
  return s.coeff(w);
}

}  // namespace lsv
