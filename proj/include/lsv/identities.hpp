#ifndef LSV_IDENTITIES_HPP
#define LSV_IDENTITIES_HPP

#include "lsv/rational.hpp"

namespace lsv {

// c_{(p,q)} = (-1)^q B_{p+q}/(p+q)! C(p+q, q) = (-1)^q B_{p+q}/(p! q!),
// the coefficient of x^p y x^q in the closed BCH linear part.
Rational c_coeff(unsigned p, unsigned q);

// Left-hand side of the x^p y² x^q coefficient identity
//
//   c_{(p,q)} + sum_{i=0}^{p} c_{(p+1-i,q)} c_{(i,0)}
//             - sum_{j=0}^{q} c_{(p,q+1-j)} c_{(0,j)}
//
// which must vanish for all p, q >= 0.
Rational eq4_residual(unsigned p, unsigned q);

// Residual of the quadratic Bernoulli recursion
//
//   -n B_n - sum_{k=1}^{n} C(n,k) B_k B_{n-k} - n B_{n-1}
//
// which must vanish for all n >= 1 (this recursion, from B_0 = 1, is how
// the table is generated, so a zero residual certifies the memo table
// against an independent evaluation order).
Rational recursion_residual(unsigned n);

// Euler's formula, valid for even n > 2:
//
//   -(n+1) B_n / n!  -  sum_{k=2}^{n-2} B_k/k! · B_{n-k}/(n-k)!
//
// Throws std::invalid_argument unless n is even and > 2.
Rational euler_residual(unsigned n);

// The generalized identity, for even n >= 2 and 0 <= m <= n-1:
//
//   LHS = -B_n/n! C(n+1, n-m)
//   RHS = sum_{i=2}^{m}     B_i/i! B_{n-i}/(n-i)! C(n-i, n-m-1)
//      <join>
//         sum_{j=2}^{n-m-1} B_j/j! B_{n-j}/(n-j)! C(n-j, m)
//
// where <join> is "-" as printed in the source identity and "+" in the
// corrected form obtained by substituting the c-coefficients into the
// x^p y² x^q identity (n = p+q+1, m = p). Sums with upper index below 2
// contribute zero. Returns LHS - RHS. Both variants are evaluated and
// reported by the verification front-end; the corrected one is the variant
// consistent with eq4_residual (see gen_euler_eq4_link), and the two agree
// whenever the second sum is empty (m >= n-2), reproducing Euler's formula
// at m = n-1.
enum class GenEulerVariant { AsPrinted, SumCorrected };
Rational gen_euler_residual(unsigned n, unsigned m, GenEulerVariant variant);

// The symbolic bridge between the generalized identity and the coefficient
// identity: for 1 <= m <= n-2,
//
//   gen_euler_residual(n, m, SumCorrected)
//     == -(-1)^{n-m-1} · eq4_residual(m, n-m-1)
//
// holds term by term (independently of the numeric Bernoulli values).
// Returns the difference of the two sides, which must always vanish; this
// is what arbitrates which sign variant the derivation actually yields.
Rational gen_euler_eq4_link(unsigned n, unsigned m);

}  // namespace lsv

#endif
