#include "lsv/bch.hpp"

#include <stdexcept>

#include "lsv/bernoulli.hpp"

namespace lsv {

namespace {

constexpr Letter kY = 0;
constexpr Letter kX = 1;

void accumulate(std::map<Word, Rational>& acc, Word w, Rational c) {
  auto [it, inserted] = acc.try_emplace(std::move(w), std::move(c));
  if (!inserted) it->second += c;
}

// Appends further blocks y^p x^q (p+q >= 1) to `w` and records the finished
// tuple at every depth: a tuple of k blocks contributes
// (-1)^{k-1}/k · 1/(p_1!q_1!…p_k!q_k!) to its word.
void direct_blocks(const Word& w, const Rational& inv_denominators, int blocks,
                   int order, std::map<Word, Rational>& acc) {
  if (blocks >= 1) {
    Rational c(blocks % 2 == 1 ? 1 : -1, blocks);
    c.canonicalize();
    accumulate(acc, w, c * inv_denominators);
  }
  int room = order - int(w.size());
  for (int total = 1; total <= room; ++total) {
    for (int p = 0; p <= total; ++p) {
      int q = total - p;
      Word extended = w + word_power(kY, std::size_t(p)) +
                      word_power(kX, std::size_t(q));
      Rational inv = inv_denominators / (factorial(unsigned(p)) *
                                         factorial(unsigned(q)));
      direct_blocks(extended, inv, blocks + 1, order, acc);
    }
  }
}

}  // namespace

AlphabetPtr bch_alphabet() {
  static AlphabetPtr alphabet = Alphabet::make({{"y", -1}, {"x", 0}});
  return alphabet;
}

Series bch_log(int n) {
  if (n < 1) throw std::invalid_argument("bch_log: order must be >= 1");
  AlphabetPtr alphabet = bch_alphabet();
  Series y = Series::generator(alphabet, n, kY);
  Series x = Series::generator(alphabet, n, kX);
  return log1p(product(exp(y), exp(x)) - Series::unit(alphabet, n));
}

Series bch_direct(int n) {
  if (n < 1) throw std::invalid_argument("bch_direct: order must be >= 1");
  std::map<Word, Rational> acc;
  direct_blocks(Word(), Rational(1), 0, n, acc);
  return Series::from_terms(bch_alphabet(), n, std::move(acc));
}

Series linear_part(const Series& s, Letter g) {
  std::map<Word, Rational> kept;
  for (const auto& [w, c] : s.terms())
    if (w.count(g) == 1) kept.emplace_hint(kept.end(), w, c);
  return Series::from_terms(s.alphabet(), s.order(), std::move(kept));
}

Series linear_part(const Series& s, std::string_view gen_name) {
  return linear_part(s, s.alphabet()->letter(gen_name));
}

Series bch_linear_closed(int order) {
  if (order < 1)
    throw std::invalid_argument("bch_linear_closed: order must be >= 1");
  std::map<Word, Rational> acc;
  for (int n = 0; n < order; ++n) {
    Rational b_over = bernoulli(std::size_t(n));
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      Rational c = b_over / (factorial(unsigned(p)) * factorial(unsigned(q)));
      if (q % 2 != 0) c = -c;
      if (is_zero(c)) continue;
      accumulate(acc,
                 word_power(kX, std::size_t(p)) + Word::single(kY) +
                     word_power(kX, std::size_t(q)),
                 c);
    }
  }
  return Series::from_terms(bch_alphabet(), order, std::move(acc));
}

}  // namespace lsv
