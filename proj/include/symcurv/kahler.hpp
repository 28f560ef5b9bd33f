#pragma once

#include "symcurv/curvature.hpp"

namespace symcurv {

// Flat-space model of constant (para-)holomorphic sectional curvature 4c:
// metric g, structure J with J∘J = eps I (eps = -1 complex, +1 para),
// omega_{ij} = J_i^p g_{pj}, and the curvature built from the
// constant-curvature normal form.
struct KahlerModel {
  int n;
  Rational c;
  int eps;  // -1 or +1
  Tensor g;        // (down, down)
  Tensor j;        // (down, up): (Jx)^q = J_p^q x^p
  SymplecticForm omega;
  Tensor r_low;

  int dim() const { return 2 * n; }
  Rational g_pair(const Tensor& x, const Tensor& y) const;
  Tensor apply_j(const Tensor& x) const;
  Tensor ricci() const;  // 2(n+1) c g
  CurvatureData data() const;
};

KahlerModel make_kahler_model(int n, const Rational& c, int eps);

// Sectional value on the span of a nonnull x and Jx, by the metric
// expression; the two metric assemblies must agree, and for the model
// the value is 4c.
struct HolomorphicSectional {
  Rational by_denominator_form;  // g(R(Jx,x)x, Jx) / (g(x,x)g(Jx,Jx) - g(x,Jx)^2)
  Rational by_square_form;       // -eps g(R(Jx,x)x, Jx) / g(x,x)^2
  Rational omega_form;           // -eps omega(R(Jx,x)x, x) / g(x,x)^2
  Rational value;                // = by_square_form
};

HolomorphicSectional holomorphic_sectional(const KahlerModel& model, const Tensor& x);

// scurv_{span{x,Jx}}(y) = g(y,y) * hcurv for y in span{x, Jx}.
bool grs_check(const KahlerModel& model, const Tensor& x, const Tensor& y);

// g^{ab} W_{iab}^p g_{pj} computed with the metric inverse; for the
// model this is zero (Einstein).
Tensor metric_weyl_trace(const KahlerModel& model);

}  // namespace symcurv
