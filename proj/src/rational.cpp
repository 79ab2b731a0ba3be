#include "lsv/rational.hpp"

#include <stdexcept>

namespace lsv {

Rational rational_from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class r;
  if (r.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + std::string(text));
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Rational(0);
  mpz_class b;
  mpz_bin_ui(b.get_mpz_t(), mpz_class(n).get_mpz_t(),
             static_cast<unsigned long>(k));
  return Rational(b);
}

}  // namespace lsv
