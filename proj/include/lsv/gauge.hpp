#ifndef LSV_GAUGE_HPP
#define LSV_GAUGE_HPP

#include <vector>

#include "lsv/models.hpp"
#include "lsv/series.hpp"

namespace lsv {

struct McReport {
  bool flat = false;
  Series residual;  // d(s) + 1/2 [s,s]
};

// Maurer-Cartan test for a homogeneous degree -1 element (throws on wrong
// degree). The zero series is flat.
McReport is_mc(const DifferentialModel& model, const Series& s);

// Operator series in a degree-0 gauge parameter x (degree checked; the
// degree-0 restriction keeps every Koszul sign trivial). Truncation by word
// length makes each a finite sum: every nonconstant bracket with x adds at
// least one letter, standing in for the local nilpotency hypothesis.
//
//   op_exp_ad(x,y) = sum ad_x^n(y) / n!
//   op_f(x,y)      = sum ad_x^n(y) / (n+1)!        ( (e^{ad_x}-id)/ad_x )
//   op_f_inv(x,y)  = sum B_n ad_x^n(y) / n!        ( ad_x/(e^{ad_x}-id) )
//
// op_f and op_f_inv are mutually inverse through the order.
Series op_exp_ad(const Series& x, const Series& y);
Series op_f(const Series& x, const Series& y);
Series op_f_inv(const Series& x, const Series& y);

// The gauge action of a degree-0 element on a degree -1 element:
//
//   x * a = e^{ad_x}(a) - f_x(dx)
//         = sum ad_x^i(a)/i! - sum ad_x^i(dx)/(i+1)!
//
// This is the orientation under which z gauges b to a in the
// Lawrence-Sullivan model.
Series gauge(const DifferentialModel& model, const Series& x, const Series& a);

// The polynomial path p(t) = sum a_n t^n with
//
//   p(0) = a,   p'(t) = ad_x p(t) - dx
//
// i.e. a_1 = ad_x(a_0) - dx and a_{n+1} = ad_x(a_n)/(n+1) for n >= 1, so
// that p(1) = x * a exactly. (The same recursion with x negated transports
// a to (-x) * a; see NOTES in the gauge source for why this orientation is
// the consistent one.)
class GaugePath {
 public:
  GaugePath(Series x, std::vector<Series> coefficients);

  const Series& parameter() const { return x_; }
  const std::vector<Series>& coefficients() const { return coefficients_; }
  const Series& coefficient(std::size_t n) const { return coefficients_[n]; }

  // p(1) = sum of the coefficients.
  Series at_one() const;

 private:
  Series x_;
  std::vector<Series> coefficients_;
};

GaugePath gauge_ode(const DifferentialModel& model, const Series& x,
                    const Series& a);

// The constructive direction of the gauge/morphism correspondence: given a
// degree-0 element w and a flat element v of `target`, the morphism from
// the Lawrence-Sullivan model with
//
//   a |-> w * v,   b |-> v,   z |-> w.
//
// Throws std::invalid_argument (with the residual rendered) when v is not
// flat through the order.
AlgebraMorphism morphism_from_gauge(const Series& w, const Series& v,
                                    const DifferentialModel& target);

}  // namespace lsv

#endif
