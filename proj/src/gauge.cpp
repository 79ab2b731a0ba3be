#include "lsv/gauge.hpp"

#include <stdexcept>

#include "lsv/bernoulli.hpp"

// NOTES on orientation. With f_x = (e^{ad_x} - id)/ad_x, the closed form
//
//   x * a = e^{ad_x}(a) - f_x(dx)
//
// is the one under which the defining identity of the Lawrence-Sullivan
// differential gives z * b = a: writing dz = ad_z(b) + f_z^{-1}(b-a),
//
//   f_z(dz) = (e^{ad_z} - id)(b) + (b - a) = e^{ad_z}(b) - a.
//
// The companion path p(t) = sum a_n t^n with p(0) = a and p(1) = x * a
// then solves p' = ad_x p - dx. The reversed ODE p' = dx - ad_x p (the
// recursion a_1 = dx - ad_x a, a_{n+1} = -ad_x(a_n)/(n+1)) sums instead to
// e^{-ad_x}(a) + f_{-x}(dx) = (-x) * a, i.e. it is the path of the inverse
// parameter; gauge_ode uses the orientation that matches gauge().

namespace lsv {

namespace {

void require_gauge_degrees(const DifferentialModel& model, const Series& x,
                           const Series& a) {
  if (!same_alphabet(x.alphabet(), model.alphabet) ||
      !same_alphabet(a.alphabet(), model.alphabet))
    throw std::invalid_argument("gauge: alphabet mismatch");
  if (!x.is_homogeneous_of(0))
    throw std::invalid_argument("gauge parameter must have degree 0");
  if (!a.is_homogeneous_of(-1))
    throw std::invalid_argument("gauge input must have degree -1");
}

void require_degree_zero(const Series& x, const Series& y, const char* op) {
  if (!same_alphabet(x.alphabet(), y.alphabet()))
    throw std::invalid_argument(std::string(op) + ": alphabet mismatch");
  if (!x.is_homogeneous_of(0))
    throw std::invalid_argument(std::string(op) +
                                ": operator parameter must have degree 0");
}

}  // namespace

McReport is_mc(const DifferentialModel& model, const Series& s) {
  if (!same_alphabet(s.alphabet(), model.alphabet))
    throw std::invalid_argument("is_mc: alphabet mismatch");
  if (!s.is_homogeneous_of(-1))
    throw std::invalid_argument("Maurer-Cartan test requires degree -1");
  Series residual =
      derive(model.differential, s) + bracket(s, s).scaled(Rational(1, 2));
  return {residual.is_zero(), std::move(residual)};
}

Series op_exp_ad(const Series& x, const Series& y) {
  require_degree_zero(x, y, "op_exp_ad");
  int order = std::min(x.order(), y.order());
  Series acc = y.truncated(order);
  Series iterated = acc;
  Rational inv_factorial(1);
  for (int n = 1; n <= order + 1; ++n) {
    iterated = bracket(x, iterated);
    if (iterated.is_zero()) break;
    inv_factorial /= Rational(n);
    acc += iterated.scaled(inv_factorial);
  }
  return acc;
}

Series op_f(const Series& x, const Series& y) {
  require_degree_zero(x, y, "op_f");
  int order = std::min(x.order(), y.order());
  Series iterated = y.truncated(order);
  Series acc = iterated;  // n = 0 term: y / 1!
  Rational inv_factorial(1);
  for (int n = 1; n <= order + 1; ++n) {
    iterated = bracket(x, iterated);
    if (iterated.is_zero()) break;
    inv_factorial /= Rational(n + 1);
    acc += iterated.scaled(inv_factorial);
  }
  return acc;
}

Series op_f_inv(const Series& x, const Series& y) {
  require_degree_zero(x, y, "op_f_inv");
  int order = std::min(x.order(), y.order());
  Series iterated = y.truncated(order);
  Series acc = iterated;  // B_0 = 1
  Rational inv_factorial(1);
  for (int n = 1; n <= order + 1; ++n) {
    iterated = bracket(x, iterated);
    if (iterated.is_zero()) break;
    inv_factorial /= Rational(n);
    acc += iterated.scaled(bernoulli(std::size_t(n)) * inv_factorial);
  }
  return acc;
}

Series gauge(const DifferentialModel& model, const Series& x, const Series& a) {
  require_gauge_degrees(model, x, a);
  Series dx = derive(model.differential, x);
  return op_exp_ad(x, a) - op_f(x, dx);
}

GaugePath::GaugePath(Series x, std::vector<Series> coefficients)
    : x_(std::move(x)), coefficients_(std::move(coefficients)) {
  if (coefficients_.empty())
    throw std::invalid_argument("gauge path needs at least p(0)");
}

Series GaugePath::at_one() const {
  Series sum = coefficients_.front();
  for (std::size_t n = 1; n < coefficients_.size(); ++n)
    sum += coefficients_[n];
  return sum;
}

GaugePath gauge_ode(const DifferentialModel& model, const Series& x,
                    const Series& a) {
  require_gauge_degrees(model, x, a);
  int order = std::min(x.order(), a.order());
  Series dx = derive(model.differential, x).truncated(order);

  std::vector<Series> coefficients;
  coefficients.push_back(a.truncated(order));
  Series next = bracket(x, coefficients[0]) - dx;
  for (int n = 1; n <= order + 1 && !next.is_zero(); ++n) {
    coefficients.push_back(next);
    next = bracket(x, next).scaled(Rational(1, n + 1));
  }
  return GaugePath(x, std::move(coefficients));
}

AlgebraMorphism morphism_from_gauge(const Series& w, const Series& v,
                                    const DifferentialModel& target) {
  int order = target.order;
  Series w_t = w.truncated(std::min(order, w.order()));
  Series v_t = v.truncated(std::min(order, v.order()));
  if (w_t.order() != order || v_t.order() != order)
    throw std::invalid_argument(
        "morphism_from_gauge: inputs materialized below the target order");
  McReport mc = is_mc(target, v_t);
  if (!mc.flat)
    throw std::invalid_argument(
        "morphism_from_gauge: v is not flat; residual = " +
        mc.residual.to_text());
  Series u = gauge(target, w_t, v_t);
  return AlgebraMorphism(ls_alphabet(), target.alphabet,
                         {std::move(u), std::move(v_t), std::move(w_t)});
}

}  // namespace lsv
