#include "lsv/identities.hpp"

#include <stdexcept>

#include "lsv/bernoulli.hpp"

namespace lsv {

Rational c_coeff(unsigned p, unsigned q) {
  Rational c = bernoulli(p + q) / (factorial(p) * factorial(q));
  return q % 2 != 0 ? -c : c;
}

Rational eq4_residual(unsigned p, unsigned q) {
  Rational sum = c_coeff(p, q);
  for (unsigned i = 0; i <= p; ++i)
    sum += c_coeff(p + 1 - i, q) * c_coeff(i, 0);
  for (unsigned j = 0; j <= q; ++j)
    sum -= c_coeff(p, q + 1 - j) * c_coeff(0, j);
  return sum;
}

Rational recursion_residual(unsigned n) {
  if (n < 1) throw std::invalid_argument("recursion_residual: n must be >= 1");
  Rational lhs = Rational(-long(n)) * bernoulli(n);
  Rational rhs(0);
  for (unsigned k = 1; k <= n; ++k)
    rhs += binomial(n, long(k)) * bernoulli(k) * bernoulli(n - k);
  rhs += Rational(long(n)) * bernoulli(n - 1);
  return lhs - rhs;
}

Rational euler_residual(unsigned n) {
  if (n % 2 != 0 || n <= 2)
    throw std::invalid_argument("euler_residual: n must be even and > 2");
  Rational lhs = Rational(-long(n + 1)) * bernoulli(n) / factorial(n);
  Rational rhs(0);
  for (unsigned k = 2; k + 2 <= n; ++k)
    rhs += (bernoulli(k) / factorial(k)) * (bernoulli(n - k) / factorial(n - k));
  return lhs - rhs;
}

Rational gen_euler_residual(unsigned n, unsigned m, GenEulerVariant variant) {
  if (n % 2 != 0 || n < 2)
    throw std::invalid_argument("gen_euler_residual: n must be even and >= 2");
  if (m > n - 1)
    throw std::invalid_argument("gen_euler_residual: m must be in [0, n-1]");
  Rational lhs = -bernoulli(n) / factorial(n) * binomial(n + 1, long(n - m));
  Rational sum1(0);
  for (unsigned i = 2; i <= m; ++i)
    sum1 += (bernoulli(i) / factorial(i)) *
            (bernoulli(n - i) / factorial(n - i)) *
            binomial(n - i, long(n - m - 1));
  Rational sum2(0);
  for (unsigned j = 2; j + m + 1 <= n; ++j)
    sum2 += (bernoulli(j) / factorial(j)) *
            (bernoulli(n - j) / factorial(n - j)) * binomial(n - j, long(m));
  Rational rhs = variant == GenEulerVariant::AsPrinted ? Rational(sum1 - sum2)
                                                       : Rational(sum1 + sum2);
  return lhs - rhs;
}

Rational gen_euler_eq4_link(unsigned n, unsigned m) {
  if (m < 1 || m > n - 2)
    throw std::invalid_argument("gen_euler_eq4_link: m must be in [1, n-2]");
  unsigned q = n - m - 1;
  Rational expected = eq4_residual(m, q);
  if (q % 2 == 0) expected = -expected;  // (-1)^{q+1} eq4_residual(m, q)
  return gen_euler_residual(n, m, GenEulerVariant::SumCorrected) - expected;
}

}  // namespace lsv
