#ifndef LSV_SERIES_HPP
#define LSV_SERIES_HPP

#include <map>
#include <optional>
#include <string>

#include "lsv/alphabet.hpp"
#include "lsv/rational.hpp"

namespace lsv {

// A truncated noncommutative formal series: a finite map from words to
// nonzero exact rationals plus an explicit truncation order N (maximal
// retained word length). Truncation is always by word length, never by
// degree: degree-0 generators make degree truncation non-terminating.
//
// Series are value types; every operation is pure. Binary operations
// require structurally equal alphabets and produce the minimum of the two
// orders. Words longer than the order are discarded on construction and
// by every operation, and no stored coefficient is ever zero.
class Series {
 public:
  // The zero series.
  Series(AlphabetPtr alphabet, int order);

  static Series unit(AlphabetPtr alphabet, int order);
  static Series generator(AlphabetPtr alphabet, int order, Letter g);
  static Series generator(AlphabetPtr alphabet, int order, std::string_view name);
  static Series monomial(AlphabetPtr alphabet, int order, Word w, Rational coeff);
  // Validates letters and lengths; strips zero coefficients.
  static Series from_terms(AlphabetPtr alphabet, int order,
                           std::map<Word, Rational> terms);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int order() const { return order_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Word& w) const;
  Rational constant_term() const { return coeff(Word()); }

  // Restriction to words of length <= m (m <= order), with order lowered
  // to m. Restricting the result of any operation commutes with computing
  // the operation at the lower order.
  Series truncated(int m) const;

  // Restriction to words of a single length.
  Series length_part(std::size_t len) const;

  // Degree of the series if every word has the same degree; nullopt when
  // zero or inhomogeneous.
  std::optional<int> homogeneous_degree() const;
  // True when every word has degree d. The zero series is homogeneous of
  // every degree.
  bool is_homogeneous_of(int d) const;

  Series operator-() const;
  Series operator+(const Series& other) const;
  Series operator-(const Series& other) const;
  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series scaled(const Rational& c) const;

  // Exact coefficient-map equality (same alphabet, same order, same terms).
  bool operator==(const Series& other) const;

  // Canonical text rendering: terms sorted length-lex, each as
  // "coeff·g1⊗g2⊗…" (the empty word prints as the bare coefficient);
  // the zero series prints as "0". Stable; used by the CLI and golden tests.
  std::string to_text() const;

 private:
  void strip_zeros();

  AlphabetPtr alphabet_;
  int order_;
  std::map<Word, Rational> terms_;
};

Series operator*(const Rational& c, const Series& s);

// Concatenation product in the tensor algebra, truncated to
// min(order(s), order(t)).
Series product(const Series& s, const Series& t);

// Graded commutator [s,t] = st - (-1)^{|s_i||t_j|} ts, with the Koszul sign
// computed per pair of homogeneous word components.
Series bracket(const Series& s, const Series& t);

// n-fold iterated bracket [x,[x,...,[x,y]...]].
Series ad_pow(const Series& x, unsigned n, const Series& y);

// sum_{n>=0} s^n / n! through the truncation order. Requires zero constant
// term (throws std::invalid_argument otherwise); only n <= order contributes.
Series exp(const Series& s);

// sum_{n>=1} (-1)^{n-1} s^n / n through the truncation order. Requires zero
// constant term.
Series log1p(const Series& s);

// Coefficient-map agreement on all words of length <= m.
bool equal_through(const Series& s, const Series& t, int m);

namespace detail {

// The product and bracket kernels exist in two forms: a serial reference
// and an OpenMP version parallelized over result word lengths (each output
// length-bucket depends on a disjoint set of input bucket pairs). Exact
// rational arithmetic makes the parallel result bit-identical to the serial
// one; tests assert this. The public product()/bracket() dispatch on input
// size unless a mode is forced.
enum class ParallelMode { Auto, ForceSerial, ForceParallel };
void set_parallel_mode(ParallelMode mode);
ParallelMode parallel_mode();

Series product_serial(const Series& s, const Series& t);
Series product_parallel(const Series& s, const Series& t);
Series bracket_serial(const Series& s, const Series& t);
Series bracket_parallel(const Series& s, const Series& t);

}  // namespace detail

}  // namespace lsv

#endif
