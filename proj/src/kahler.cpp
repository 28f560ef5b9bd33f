#include "symcurv/kahler.hpp"

#include <stdexcept>

namespace symcurv {

Rational KahlerModel::g_pair(const Tensor& x, const Tensor& y) const {
  Rational s(0);
  for (int i = 0; i < dim(); ++i) {
    if (x.at({i}) == 0) continue;
    for (int j2 = 0; j2 < dim(); ++j2) s += g.at({i, j2}) * x.at({i}) * y.at({j2});
  }
  return s;
}

Tensor KahlerModel::apply_j(const Tensor& x) const {
  Tensor out(dim(), {Var::up});
  for (int q = 0; q < dim(); ++q) {
    Rational s(0);
    for (int p = 0; p < dim(); ++p) s += j.at({p, q}) * x.at({p});
    out.at({q}) = s;
  }
  return out;
}

Tensor KahlerModel::ricci() const { return g * (Rational(2 * (n + 1)) * c); }

CurvatureData KahlerModel::data() const {
  return {omega, r_low, ricci(), Tensor(dim(), {Var::down, Var::down, Var::down})};
}

KahlerModel make_kahler_model(int n, const Rational& c, int eps) {
  if (eps != -1 && eps != 1) throw std::invalid_argument("kahler model: eps must be -1 or +1");
  if (n < 2) throw std::invalid_argument("kahler model: needs n >= 2");
  const int d = 2 * n;
  Tensor g(d, {Var::down, Var::down});
  Tensor j(d, {Var::down, Var::up});
  for (int m = 0; m < n; ++m) {
    const int a = 2 * m, b = 2 * m + 1;
    if (eps == -1) {
      g.at({a, a}) = Rational(1);
      g.at({b, b}) = Rational(1);
      j.at({a, b}) = Rational(1);   // J e_a = e_b
      j.at({b, a}) = Rational(-1);  // J e_b = -e_a
    } else {
      g.at({a, b}) = Rational(1);
      g.at({b, a}) = Rational(1);
      j.at({a, a}) = Rational(1);   // J e_a = e_a
      j.at({b, b}) = Rational(-1);  // J e_b = -e_b
    }
  }
  // omega_{ij} = J_i^p g_{pj}
  Tensor om(d, {Var::down, Var::down});
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      Rational s(0);
      for (int p = 0; p < d; ++p) s += j.at({i, p}) * g.at({p, k});
      om.at({i, k}) = s;
    }
  SymplecticForm form = SymplecticForm::from_matrix(om);

  // R = 2c (Om_{i(k} g_{l)j} - Om_{j(k} g_{l)i} + Om_{ij} g_{kl})
  Tensor r = curvature_from_quadratic(g, form) * c;

  KahlerModel model{n, c, eps, std::move(g), std::move(j), std::move(form), std::move(r)};

  // Construction invariants.
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      Rational s(0);
      for (int m2 = 0; m2 < d; ++m2) s += model.j.at({p, m2}) * model.j.at({m2, q});
      if (s != Rational(eps) * Rational(p == q ? 1 : 0))
        throw std::runtime_error("kahler model: J∘J != eps I");
    }
  Tensor ric = ricci_from_mixed(lowered_to_mixed(model.r_low, model.omega));
  if (!(ric == model.ricci())) throw std::runtime_error("kahler model: Ricci trace mismatch");
  if (!weyl(model.r_low, ric, model.omega).is_zero())
    throw std::runtime_error("kahler model: Weyl part nonzero");
  if (!metric_weyl_trace(model).is_zero())
    throw std::runtime_error("kahler model: metric Weyl trace nonzero");
  return model;
}

HolomorphicSectional holomorphic_sectional(const KahlerModel& model, const Tensor& x) {
  Rational gxx = model.g_pair(x, x);
  if (gxx == 0) throw std::invalid_argument("holomorphic_sectional: null vector");
  Tensor jx = model.apply_j(x);
  Tensor rm = lowered_to_mixed(model.r_low, model.omega);
  const int d = model.dim();
  // R(Jx, x)x
  Tensor rz(d, {Var::up});
  for (int l = 0; l < d; ++l) {
    Rational s(0);
    for (int i = 0; i < d; ++i)
      for (int j2 = 0; j2 < d; ++j2)
        for (int k = 0; k < d; ++k)
          s += rm.at({i, j2, k, l}) * jx.at({i}) * x.at({j2}) * x.at({k});
    rz.at({l}) = s;
  }
  HolomorphicSectional out{Rational(0), Rational(0), Rational(0), Rational(0)};
  Rational num_g = model.g_pair(rz, jx);
  Rational den = gxx * model.g_pair(jx, jx) - model.g_pair(x, jx) * model.g_pair(x, jx);
  out.by_denominator_form = num_g / den;
  out.by_square_form = Rational(-model.eps) * num_g / (gxx * gxx);
  out.omega_form = Rational(-model.eps) * model.omega.pair(rz, x) / (gxx * gxx);
  if (out.by_denominator_form != out.by_square_form)
    throw std::runtime_error("holomorphic_sectional: metric assemblies disagree");
  out.value = out.by_square_form;
  return out;
}

bool grs_check(const KahlerModel& model, const Tensor& x, const Tensor& y) {
  Tensor jx = model.apply_j(x);
  SectionalForm s = sectional_form(model.r_low, model.omega, x, jx);
  Rational lhs = evaluate_quadratic(s.s, y);
  Rational rhs = model.g_pair(y, y) * holomorphic_sectional(model, x).value;
  return lhs == rhs;
}

Tensor metric_weyl_trace(const KahlerModel& model) {
  const int d = model.dim();
  Tensor ric = ricci_from_mixed(lowered_to_mixed(model.r_low, model.omega));
  Tensor w = weyl(model.r_low, ric, model.omega);
  Mat gm(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gm.at(i, j) = model.g.at({i, j});
  auto ginv = inverse(gm);
  if (!ginv) throw std::runtime_error("metric_weyl_trace: singular metric");
  // g^{ab} W_{iab}^p g_{pj}; the middle index raised with omega.
  Tensor wm = flip_index(w, 3, Flip::raise, model.omega);
  Tensor out(d, {Var::down, Var::down});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational s(0);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          for (int p = 0; p < d; ++p)
            s += ginv->at(a, b) * wm.at({i, a, b, p}) * model.g.at({p, j});
      out.at({i, j}) = s;
    }
  return out;
}

}  // namespace symcurv
