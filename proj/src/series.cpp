#include "lsv/series.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lsv {

namespace {

void require_same_alphabet(const Series& s, const Series& t, const char* op) {
  if (!same_alphabet(s.alphabet(), t.alphabet()))
    throw std::invalid_argument(std::string(op) + ": alphabet mismatch");
}

void accumulate(std::map<Word, Rational>& acc, Word w, Rational c) {
  auto [it, inserted] = acc.try_emplace(std::move(w), std::move(c));
  if (!inserted) it->second += c;
}

bool koszul_negative(int d1, int d2) { return (d1 % 2) != 0 && (d2 % 2) != 0; }

using TermRef = const std::pair<const Word, Rational>*;

struct BucketedTerm {
  TermRef term;
  int degree;
};

// Terms grouped by word length, each with its degree precomputed.
std::vector<std::vector<BucketedTerm>> bucketize(const Series& s, int order) {
  std::vector<std::vector<BucketedTerm>> buckets(std::size_t(order) + 1);
  const Alphabet& alphabet = *s.alphabet();
  for (const auto& term : s.terms()) {
    const Word& w = term.first;
    if (int(w.size()) > order) break;  // terms are length-lex sorted
    buckets[w.size()].push_back({&term, w.degree(alphabet)});
  }
  return buckets;
}

// Stitches per-length accumulators (ascending length) into one map. Keys in
// bucket L all have length L, so the concatenation is already sorted and
// hinted insertion is linear.
Series stitch(const AlphabetPtr& alphabet, int order,
              std::vector<std::map<Word, Rational>>&& buckets) {
  std::map<Word, Rational> all;
  for (auto& bucket : buckets)
    for (auto& kv : bucket) all.insert(all.end(), std::move(kv));
  return Series::from_terms(alphabet, order, std::move(all));
}

std::atomic<detail::ParallelMode> g_mode{detail::ParallelMode::Auto};

bool use_parallel(std::size_t work_estimate) {
  switch (g_mode.load(std::memory_order_relaxed)) {
    case detail::ParallelMode::ForceSerial: return false;
    case detail::ParallelMode::ForceParallel: return true;
    case detail::ParallelMode::Auto: break;
  }
  return work_estimate >= 4096 && omp_get_max_threads() > 1;
}

}  // namespace

Series::Series(AlphabetPtr alphabet, int order)
    : alphabet_(std::move(alphabet)), order_(order) {
  if (!alphabet_) throw std::invalid_argument("null alphabet");
  if (order_ < 0) throw std::invalid_argument("negative truncation order");
}

Series Series::unit(AlphabetPtr alphabet, int order) {
  Series s(std::move(alphabet), order);
  s.terms_.emplace(Word(), Rational(1));
  return s;
}

Series Series::generator(AlphabetPtr alphabet, int order, Letter g) {
  Series s(std::move(alphabet), order);
  if (g >= s.alphabet_->size())
    throw std::invalid_argument("generator index out of range");
  if (order < 1) throw std::invalid_argument("order too small for a letter");
  s.terms_.emplace(Word::single(g), Rational(1));
  return s;
}

Series Series::generator(AlphabetPtr alphabet, int order,
                         std::string_view name) {
  Letter g = alphabet->letter(name);
  return generator(std::move(alphabet), order, g);
}

Series Series::monomial(AlphabetPtr alphabet, int order, Word w,
                        Rational coeff) {
  std::map<Word, Rational> terms;
  terms.emplace(std::move(w), std::move(coeff));
  return from_terms(std::move(alphabet), order, std::move(terms));
}

Series Series::from_terms(AlphabetPtr alphabet, int order,
                          std::map<Word, Rational> terms) {
  Series s(std::move(alphabet), order);
  for (const auto& [w, c] : terms) {
    if (int(w.size()) > order)
      throw std::invalid_argument("word longer than truncation order");
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] >= s.alphabet_->size())
        throw std::invalid_argument("letter outside alphabet");
    (void)c;
  }
  s.terms_ = std::move(terms);
  s.strip_zeros();
  return s;
}

void Series::strip_zeros() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = lsv::is_zero(it->second) ? terms_.erase(it) : std::next(it);
}

Rational Series::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

Series Series::truncated(int m) const {
  if (m < 0 || m > order_)
    throw std::invalid_argument("truncation outside [0, order]");
  Series out(alphabet_, m);
  for (const auto& [w, c] : terms_) {
    if (int(w.size()) > m) break;
    out.terms_.emplace_hint(out.terms_.end(), w, c);
  }
  return out;
}

Series Series::length_part(std::size_t len) const {
  Series out(alphabet_, order_);
  for (const auto& [w, c] : terms_)
    if (w.size() == len) out.terms_.emplace_hint(out.terms_.end(), w, c);
  return out;
}

std::optional<int> Series::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::optional<int> deg;
  for (const auto& [w, c] : terms_) {
    int d = w.degree(*alphabet_);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

bool Series::is_homogeneous_of(int d) const {
  for (const auto& [w, c] : terms_)
    if (w.degree(*alphabet_) != d) return false;
  return true;
}

Series Series::operator-() const {
  Series out(alphabet_, order_);
  for (const auto& [w, c] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), w, -c);
  return out;
}

Series Series::operator+(const Series& other) const {
  require_same_alphabet(*this, other, "add");
  int order = std::min(order_, other.order_);
  std::map<Word, Rational> acc;
  for (const auto& [w, c] : terms_) {
    if (int(w.size()) > order) break;
    acc.emplace_hint(acc.end(), w, c);
  }
  for (const auto& [w, c] : other.terms_) {
    if (int(w.size()) > order) break;
    accumulate(acc, w, c);
  }
  return from_terms(alphabet_, order, std::move(acc));
}

Series Series::operator-(const Series& other) const { return *this + (-other); }

Series& Series::operator+=(const Series& other) {
  if (other.order_ == order_ && same_alphabet(alphabet_, other.alphabet_)) {
    for (const auto& [w, c] : other.terms_) accumulate(terms_, w, c);
    strip_zeros();
    return *this;
  }
  *this = *this + other;
  return *this;
}

Series& Series::operator-=(const Series& other) {
  *this += -other;
  return *this;
}

Series Series::scaled(const Rational& c) const {
  Series out(alphabet_, order_);
  if (lsv::is_zero(c)) return out;
  for (const auto& [w, coeff] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), w, c * coeff);
  return out;
}

Series operator*(const Rational& c, const Series& s) { return s.scaled(c); }

bool Series::operator==(const Series& other) const {
  return order_ == other.order_ && same_alphabet(alphabet_, other.alphabet_) &&
         terms_ == other.terms_;
}

std::string Series::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << to_string(c);
    if (!w.empty()) {
      out << "·";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out << "⊗";
        out << alphabet_->name(w[i]);
      }
    }
  }
  return out.str();
}

namespace detail {

void set_parallel_mode(ParallelMode mode) {
  g_mode.store(mode, std::memory_order_relaxed);
}

ParallelMode parallel_mode() { return g_mode.load(std::memory_order_relaxed); }

Series product_serial(const Series& s, const Series& t) {
  require_same_alphabet(s, t, "product");
  int order = std::min(s.order(), t.order());
  std::map<Word, Rational> acc;
  for (const auto& [w1, c1] : s.terms()) {
    if (int(w1.size()) > order) break;
    for (const auto& [w2, c2] : t.terms()) {
      if (int(w1.size() + w2.size()) > order) break;
      accumulate(acc, w1 + w2, c1 * c2);
    }
  }
  return Series::from_terms(s.alphabet(), order, std::move(acc));
}

Series product_parallel(const Series& s, const Series& t) {
  require_same_alphabet(s, t, "product");
  int order = std::min(s.order(), t.order());
  auto sb = bucketize(s, order);
  auto tb = bucketize(t, order);
  std::vector<std::map<Word, Rational>> buckets(std::size_t(order) + 1);
#pragma omp parallel for schedule(dynamic)
  for (int len = 0; len <= order; ++len) {
    auto& acc = buckets[len];
    for (int i = 0; i <= len; ++i)
      for (const auto& a : sb[i])
        for (const auto& b : tb[len - i])
          accumulate(acc, a.term->first + b.term->first,
                     a.term->second * b.term->second);
  }
  return stitch(s.alphabet(), order, std::move(buckets));
}

Series bracket_serial(const Series& s, const Series& t) {
  require_same_alphabet(s, t, "bracket");
  int order = std::min(s.order(), t.order());
  const Alphabet& alphabet = *s.alphabet();
  std::map<Word, Rational> acc;
  for (const auto& [w1, c1] : s.terms()) {
    if (int(w1.size()) > order) break;
    int d1 = w1.degree(alphabet);
    for (const auto& [w2, c2] : t.terms()) {
      if (int(w1.size() + w2.size()) > order) break;
      Rational c = c1 * c2;
      accumulate(acc, w1 + w2, c);
      accumulate(acc, w2 + w1, koszul_negative(d1, w2.degree(alphabet)) ? c : -c);
    }
  }
  return Series::from_terms(s.alphabet(), order, std::move(acc));
}

Series bracket_parallel(const Series& s, const Series& t) {
  require_same_alphabet(s, t, "bracket");
  int order = std::min(s.order(), t.order());
  auto sb = bucketize(s, order);
  auto tb = bucketize(t, order);
  std::vector<std::map<Word, Rational>> buckets(std::size_t(order) + 1);
#pragma omp parallel for schedule(dynamic)
  for (int len = 0; len <= order; ++len) {
    auto& acc = buckets[len];
    for (int i = 0; i <= len; ++i)
      for (const auto& a : sb[i])
        for (const auto& b : tb[len - i]) {
          Rational c = a.term->second * b.term->second;
          accumulate(acc, a.term->first + b.term->first, c);
          accumulate(acc, b.term->first + a.term->first,
                     koszul_negative(a.degree, b.degree) ? c : -c);
        }
  }
  return stitch(s.alphabet(), order, std::move(buckets));
}

}  // namespace detail

Series product(const Series& s, const Series& t) {
  return use_parallel(s.term_count() * t.term_count())
             ? detail::product_parallel(s, t)
             : detail::product_serial(s, t);
}

Series bracket(const Series& s, const Series& t) {
  return use_parallel(2 * s.term_count() * t.term_count())
             ? detail::bracket_parallel(s, t)
             : detail::bracket_serial(s, t);
}

Series ad_pow(const Series& x, unsigned n, const Series& y) {
  Series out = y;
  for (unsigned i = 0; i < n; ++i) {
    out = bracket(x, out);
    if (out.is_zero()) break;
  }
  return out;
}

Series exp(const Series& s) {
  if (!is_zero(s.constant_term()))
    throw std::invalid_argument("exp: nonzero constant term");
  int order = s.order();
  Series acc = Series::unit(s.alphabet(), order);
  Series power = Series::unit(s.alphabet(), order);
  Rational inv_factorial(1);
  for (int n = 1; n <= order; ++n) {
    power = product(power, s);
    if (power.is_zero()) break;
    inv_factorial /= Rational(n);
    acc += power.scaled(inv_factorial);
  }
  return acc;
}

Series log1p(const Series& s) {
  if (!is_zero(s.constant_term()))
    throw std::invalid_argument("log1p: nonzero constant term");
  int order = s.order();
  Series acc(s.alphabet(), order);
  Series power = Series::unit(s.alphabet(), order);
  for (int n = 1; n <= order; ++n) {
    power = product(power, s);
    if (power.is_zero()) break;
    Rational c(n % 2 == 1 ? 1 : -1, n);
    c.canonicalize();
    acc += power.scaled(c);
  }
  return acc;
}

bool equal_through(const Series& s, const Series& t, int m) {
  if (!same_alphabet(s.alphabet(), t.alphabet())) return false;
  if (m > std::min(s.order(), t.order()))
    throw std::invalid_argument(
        "equal_through: depth exceeds a truncation order");
  auto it = s.terms().begin(), jt = t.terms().begin();
  auto se = s.terms().end(), te = t.terms().end();
  while (true) {
    while (it != se && int(it->first.size()) > m) ++it;
    while (jt != te && int(jt->first.size()) > m) ++jt;
    if (it == se || jt == te) break;
    if (it->first != jt->first || it->second != jt->second) return false;
    ++it, ++jt;
  }
  return it == se && jt == te;
}

}  // namespace lsv
