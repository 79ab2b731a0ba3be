#ifndef LSV_BCH_HPP
#define LSV_BCH_HPP

#include "lsv/series.hpp"

namespace lsv {

// Two-letter alphabet {y, x} with degrees (-1, 0). The Baker-Campbell-
// Hausdorff series itself is a formal (sign-free) tensor computation —
// products never introduce Koszul signs — and these degrees make the
// substitution y |-> u'-u, x |-> su into the cylinder degree-preserving,
// while ad_x brackets stay sign-free because x is even.
AlphabetPtr bch_alphabet();

// BCH(y,x) = log(e^y e^x) through order n.
Series bch_log(int n);

// The same series evaluated from the expanded double sum
//
//   sum_{k>=1} (-1)^{k-1}/k  sum  y^{p_1}x^{q_1}…y^{p_k}x^{q_k}
//                                 / (p_1!q_1!…p_k!q_k!)
//
// over all tuples with p_i + q_i > 0 and total weight <= n. Exponential in
// n; fine for n <= 10 or so.
Series bch_direct(int n);

// Restriction of s to words containing the letter g exactly once.
Series linear_part(const Series& s, Letter g);
Series linear_part(const Series& s, std::string_view gen_name);

// The closed form of the y-linear part:
//
//   sum_{n>=0} sum_{p+q=n} (-1)^q B_n/(p!q!) x^p y x^q
//
// equal, by binomial expansion, to sum B_n/n! ad_x^n(y). All summands with
// n <= order-1 are materialized.
Series bch_linear_closed(int order);

}  // namespace lsv

#endif
