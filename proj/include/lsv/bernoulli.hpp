#ifndef LSV_BERNOULLI_HPP
#define LSV_BERNOULLI_HPP

#include <cstddef>
#include <vector>

#include "lsv/rational.hpp"

namespace lsv {

// Bernoulli numbers in the convention B_1 = -1/2, the unique one under
// which the quadratic recursion
//
//   -n B_n = sum_{k=1}^{n} C(n,k) B_k B_{n-k} + n B_{n-1}   (n >= 1)
//
// closes, the operator ad_z / (e^{ad_z} - id) has Taylor coefficients
// B_n / n!, and c_{(1,0)} = -1/2 in the cylinder differential. Values are
// computed by solving that recursion upward from B_0 = 1 (never from
// floating point or zeta values), so the table is self-certifying against
// the identity checks in lsv/identities.hpp.
//
// Thread-safe; behaves as a pure function (internal memo table).
Rational bernoulli(std::size_t n);

// B_0 .. B_max as a vector.
std::vector<Rational> bernoulli_table(std::size_t max);

}  // namespace lsv

#endif
