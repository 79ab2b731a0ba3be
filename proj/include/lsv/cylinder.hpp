#ifndef LSV_CYLINDER_HPP
#define LSV_CYLINDER_HPP

#include "lsv/models.hpp"

namespace lsv {

// Alphabet {u, u', su} with degrees (-1, -1, 0).
AlphabetPtr cylinder_alphabet();

// The one-generator tensor-algebra cylinder:
//
//   du = -u⊗u,  du' = -u'⊗u',  d(su) = u' - u + su⊗u' - u⊗su.
//
// The differential is finite, so d² = 0 holds exactly at any order >= 3.
DifferentialModel cyl_classical(int order);

// The Bernoulli-weighted tail of the perturbed differential,
//
//   sum_{n>=0} sum_{p+q=n} (-1)^q B_n/(p!q!) su^p (u'-u) su^q,
//
// materialized through the order (word length n+1).
Series dsu_tail(int order);

// The perturbed cylinder: same du, du', and
//
//   D(su) = su⊗u' - u'⊗su + dsu_tail.
DifferentialModel cyl_perturbed(int order);

// The comparison morphism a |-> u, b |-> u', z |-> su from the
// Lawrence-Sullivan model into the perturbed cylinder.
AlgebraMorphism theorem1_morphism(int order);

// chain_map_check of theorem1_morphism; the computational content of the
// isomorphism between the enveloping algebra of the LS model and the
// perturbed cylinder.
CheckOutcome theorem1_check(int order);

// Inclusions and projection of the cylinder: i0(u) = u, i1(u) = u',
// p(u) = p(u') = u, p(su) = 0. Chain maps into/out of both cylinders, with
// p∘i0 = p∘i1 = id.
AlgebraMorphism cyl_inclusion0(int order);
AlgebraMorphism cyl_inclusion1(int order);
AlgebraMorphism cyl_projection(int order);

// D²(su) = 0 rearranged through the tail B = dsu_tail:
//
//   D(B) + B⊗u' + u'⊗B
//
// which must vanish through the order.
Series eq2_residual(int order);

// Independent route to the same vanishing through the closed formula for
// D(su^p (u'-u) su^q): with x = su, y = u'-u, B = dsu_tail,
//
//   Γ(p,q) = x^p y² x^q + sum_{i<p} x^i B x^{p-1-i} y x^q
//                       - sum_{i<q} x^p y x^i B x^{q-1-i}
//
// and sum_{p+q<=order} c_{(p,q)} Γ(p,q) must vanish through the order.
Series gamma_residual(int order);

// Coefficient of the (x,y)-monomial x^p y² x^q in a cylinder series
// (extracted as the coefficient of the word su^p u u su^q, which only that
// monomial can produce). Requires p+q+2 <= order(s) to be meaningful.
Rational xyyx_coefficient(const Series& s, unsigned p, unsigned q);

}  // namespace lsv

#endif
