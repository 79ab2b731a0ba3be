#ifndef LSV_RATIONAL_HPP
#define LSV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lsv {

// The only scalar in the system: an exact fraction, always canonical
// (lowest terms, positive denominator, zero stored as 0/1). mpq_class
// keeps arithmetic results canonical; the constructors below canonicalize
// raw numerator/denominator pairs.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on garbage.
Rational rational_from_string(std::string_view text);

// Canonical rendering: "p/q" in lowest terms, integers as "p".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// n! as an exact Rational (integer-valued).
Rational factorial(unsigned long n);

// C(n,k), zero when k < 0 or k > n.
Rational binomial(unsigned long n, long k);

}  // namespace lsv

#endif
