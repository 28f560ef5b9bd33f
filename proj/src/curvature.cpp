#include "symcurv/curvature.hpp"

#include <algorithm>
#include <stdexcept>

#include "symcurv/rng.hpp"

namespace symcurv {

namespace {

Rational max_abs(const Tensor& t) {
  Rational best(0);
  for (const auto& v : t.components()) {
    Rational a = v < 0 ? Rational(-v) : v;
    if (a > best) best = a;
  }
  return best;
}

IdentityResult check_equal(const std::string& name, const Tensor& lhs, const Tensor& rhs,
                           bool vacuous = false, const std::string& correction = "") {
  Tensor diff = lhs - rhs;
  IdentityResult r;
  r.name = name;
  r.pass = diff.is_zero();
  r.vacuous = vacuous;
  r.max_discrepancy = to_string(max_abs(diff));
  r.correction = correction;
  return r;
}

IdentityResult check_zero(const std::string& name, const Tensor& t, bool vacuous = false) {
  IdentityResult r;
  r.name = name;
  r.pass = t.is_zero();
  r.vacuous = vacuous;
  r.max_discrepancy = to_string(max_abs(t));
  return r;
}

// All omega-bivector traces over unordered slot pairs vanish.
bool all_omega_traces_zero(const Tensor& t, const SymplecticForm& form) {
  const int r = t.rank();
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      Tensor tr = contract(flip_index(t, a, Flip::raise, form), a, b);
      if (!tr.is_zero()) return false;
    }
  return true;
}

}  // namespace

Tensor ricci_from_mixed(const Tensor& r_mixed) {
  if (r_mixed.rank() != 4 || r_mixed.var(3) != Var::up)
    throw std::invalid_argument("ricci: need a rank-4 mixed curvature tensor");
  return contract(r_mixed, 3, 0);
}

CurvatureData curvature_data(const LeftInvariantConnection& conn) {
  Tensor rm = curvature_mixed(conn);
  Tensor ric = ricci_from_mixed(rm);
  return {conn.alg.omega, flip_index(rm, 3, Flip::lower, conn.alg.omega), ric,
          covariant_derivative(conn, ric)};
}

CurvatureData flat_data(const SymplecticForm& omega) {
  const int d = omega.dim();
  return {omega, Tensor(d, {Var::down, Var::down, Var::down, Var::down}),
          Tensor(d, {Var::down, Var::down}), Tensor(d, {Var::down, Var::down, Var::down})};
}

Tensor weyl(const Tensor& r_low, const Tensor& ric, const SymplecticForm& omega) {
  const int d = omega.dim();
  const Rational f(1, d / 2 + 1);  // 1/(n+1)
  const Tensor& om = omega.matrix();
  Tensor w = r_low;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Rational corr =
              (om.at({i, k}) * ric.at({l, j}) + om.at({i, l}) * ric.at({k, j})) * Rational(1, 2) -
              (om.at({j, k}) * ric.at({l, i}) + om.at({j, l}) * ric.at({k, i})) * Rational(1, 2) +
              om.at({i, j}) * ric.at({k, l});
          w.at({i, j, k, l}) -= f * corr;
        }
  return w;
}

Tensor curvature_one_form(const LeftInvariantConnection& conn) {
  Tensor nr = covariant_derivative(conn, ricci_from_mixed(curvature_mixed(conn)));
  // rho_i = om^{pa} nabla_a R_{ip}: raise the derivative slot, trace it
  // against the last Ricci slot.
  return contract(flip_index(nr, 0, Flip::raise, conn.alg.omega), 0, 2);
}

Tensor curvature_one_form_alt(const LeftInvariantConnection& conn) {
  Tensor ric = ricci_from_mixed(curvature_mixed(conn));
  Tensor ric_up = flip_index(ric, 1, Flip::raise, conn.alg.omega);  // R_i^p
  Tensor n = covariant_derivative(conn, ric_up);                    // (a, i, ^p)
  return contract(n, 2, 0);
}

CurvatureFlags curvature_flags(const LeftInvariantConnection& conn) {
  CurvatureFlags f;
  CurvatureData data = curvature_data(conn);
  f.weyl_vacuous = conn.dim() == 2;
  f.preferred = sym_part(data.nabla_ric, {0, 1, 2}, Sym::symmetric).is_zero();
  f.weyl_flat = weyl(data.r_low, data.ric, data.omega).is_zero();
  f.symplectically_flat = f.weyl_flat && f.preferred;
  f.locally_symmetric = covariant_derivative(conn, data.r_low).is_zero();
  if (conn.dim() > 2 && f.weyl_flat && !f.preferred)
    throw std::runtime_error("flags: Weyl flat without preferred in dim > 2");
  return f;
}

bool IdentityReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const IdentityResult& r) { return r.pass; });
}

Tensor raise_ricci_both(const Tensor& ric, const SymplecticForm& omega) {
  return flip_index(flip_index(ric, 0, Flip::raise, omega), 1, Flip::raise, omega);
}

Tensor lowered_to_mixed(const Tensor& r_low, const SymplecticForm& omega) {
  return flip_index(r_low, 3, Flip::raise, omega);
}

IdentityReport verify_identity_suite(const LeftInvariantConnection& conn) {
  const int d = conn.dim();
  const int n = d / 2;
  const bool dim2 = (d == 2);
  const SymplecticForm& form = conn.alg.omega;
  const Tensor& om = form.matrix();
  const Tensor& omu = form.inverse_bivector();

  Tensor rm = curvature_mixed(conn);
  Tensor r4 = flip_index(rm, 3, Flip::lower, form);
  Tensor ric = ricci_from_mixed(rm);
  Tensor w = weyl(r4, ric, form);
  Tensor nric = covariant_derivative(conn, ric);
  Tensor n2ric = covariant_derivative(conn, nric);
  Tensor nr4 = covariant_derivative(conn, r4);
  Tensor nrm = covariant_derivative(conn, rm);
  Tensor nw = covariant_derivative(conn, w);
  Tensor rho = curvature_one_form(conn);
  Tensor nrho = covariant_derivative(conn, rho);
  Tensor ric_up = raise_ricci_both(ric, form);  // R^{pq}

  IdentityReport rep;

  rep.items.push_back(
      check_zero("curv_antisym_first_pair", sym_part(r4, {0, 1}, Sym::symmetric)));
  rep.items.push_back(check_zero("curvsym_last_pair", sym_part(r4, {2, 3}, Sym::antisymmetric)));
  rep.items.push_back(check_zero("bianchi_first", sym_part(r4, {0, 1, 2}, Sym::antisymmetric)));

  {
    Tensor lhs = r4 * Rational(4);
    Tensor rhs = (sym_part(r4, {1, 2, 3}, Sym::symmetric) -
                  permute_slots(sym_part(r4, {1, 2, 3}, Sym::symmetric), {1, 0, 2, 3})) *
                 Rational(3);
    rep.items.push_back(check_equal("rsym_curvature", lhs, rhs));
    Tensor lw = w * Rational(4);
    Tensor rw = (sym_part(w, {1, 2, 3}, Sym::symmetric) -
                 permute_slots(sym_part(w, {1, 2, 3}, Sym::symmetric), {1, 0, 2, 3})) *
                Rational(3);
    rep.items.push_back(check_equal("rsym_weyl", lw, rw, dim2));
  }

  rep.items.push_back(check_zero("ricci_symmetric", sym_part(ric, {0, 1}, Sym::antisymmetric)));

  {
    // R_p^p_{ij} = -2 R_{ip}^p_j = 2 R_{pij}^p = 2 R_{ij}, each side assembled
    // by its own contraction path.
    Tensor e1 = contract(flip_index(r4, 1, Flip::raise, form), 1, 0);
    Tensor e2 = contract(flip_index(r4, 2, Flip::raise, form), 2, 1) * Rational(-2);
    Tensor e3 = contract(flip_index(r4, 3, Flip::raise, form), 3, 0) * Rational(2);
    Tensor e4 = ric * Rational(2);
    rep.items.push_back(check_equal("twotraces_a", e1, e2));
    rep.items.push_back(check_equal("twotraces_b", e1, e3));
    rep.items.push_back(check_equal("twotraces_c", e1, e4));
  }

  {
    // nabla^p R_{pijk} = nabla_i R_{jk}
    Tensor div = contract(flip_index(nr4, 0, Flip::raise, form), 0, 1);
    rep.items.push_back(check_equal("symdiffbianchi", div, nric));
  }

  {
    // nabla_p R_{ijk}^p = -2 nabla_{[i} R_{j]k}, and its omega-trace over
    // (j,k) recovers -rho_i.
    Tensor divm = contract(nrm, 4, 0);
    Tensor rhs = sym_part(nric, {0, 1}, Sym::antisymmetric) * Rational(-2);
    rep.items.push_back(check_equal("divcurv_skew", divm, rhs));
    Tensor tr = contract(flip_index(divm, 1, Flip::raise, form), 1, 2);
    rep.items.push_back(check_equal("divcurv_trace_rho", tr, -rho));
  }

  {
    bool tf = all_omega_traces_zero(w, form);
    IdentityResult r;
    r.name = "weyl_traces";
    r.pass = tf;
    r.vacuous = dim2;
    r.max_discrepancy = tf ? "0" : "nonzero";
    rep.items.push_back(r);
  }

  {
    // W_{i(jkl)} = R_{i(jkl)} - (2/(n+1)) Om_{i(j} R_{kl)}
    Tensor lhs = sym_part(w, {1, 2, 3}, Sym::symmetric);
    Tensor omric = sym_part(tensor_product(om, ric), {1, 2, 3}, Sym::symmetric);
    Tensor rhs = sym_part(r4, {1, 2, 3}, Sym::symmetric) - omric * Rational(2, n + 1);
    rep.items.push_back(check_equal("wsym", lhs, rhs));
  }

  Tensor divw = contract(flip_index(nw, 0, Flip::raise, form), 0, 1);  // nabla^p W_{pijk}
  {
    // 2(n+1) nabla^p W_{pijk} = (2n+1) nabla_i R_{jk} - 3 nabla_{(i}R_{jk)} + Om_{i(j} rho_{k)}
    Tensor lhs = divw * Rational(2 * (n + 1));
    Tensor omrho(d, {Var::down, Var::down, Var::down});
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          omrho.at({i, j, k}) =
              (om.at({i, j}) * rho.at({k}) + om.at({i, k}) * rho.at({j})) * Rational(1, 2);
    Tensor rhs = nric * Rational(2 * n + 1) -
                 sym_part(nric, {0, 1, 2}, Sym::symmetric) * Rational(3) + omrho;
    rep.items.push_back(check_equal("divw1", lhs, rhs));
  }

  {
    // (n+1) nabla^p W_{p(ijk)} = (n-1) nabla_{(i} R_{jk)}
    Tensor lhs = sym_part(divw, {0, 1, 2}, Sym::symmetric) * Rational(n + 1);
    Tensor rhs = sym_part(nric, {0, 1, 2}, Sym::symmetric) * Rational(n - 1);
    rep.items.push_back(check_equal("divw_sym", lhs, rhs, dim2));
  }

  {
    // 2(n+1) nabla^p W_{ijkp} = -2(2n+1) nabla_{[i}R_{j]k} - Om_{ij} rho_k + Om_{k[i} rho_{j]}
    Tensor divw_last = contract(flip_index(nw, 0, Flip::raise, form), 0, 4);
    Tensor lhs = divw_last * Rational(2 * (n + 1));
    Tensor rhs = sym_part(nric, {0, 1}, Sym::antisymmetric) * Rational(-2 * (2 * n + 1));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          rhs.at({i, j, k}) += -om.at({i, j}) * rho.at({k}) +
                               (om.at({k, i}) * rho.at({j}) - om.at({k, j}) * rho.at({i})) *
                                   Rational(1, 2);
    rep.items.push_back(check_equal("divw_last", lhs, rhs));
  }

  Tensor k_ij(d, {Var::down, Var::down});  // K_{ij} = R_{ip} R_j^p = R_{ip} om^{pa} R_{ja}
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational s(0);
      for (int p = 0; p < d; ++p)
        for (int a = 0; a < d; ++a) s += ric.at({i, p}) * omu.at({p, a}) * ric.at({j, a});
      k_ij.at({i, j}) = s;
    }
  Rational ric_norm(0);  // R^{pq} R_{pq}
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) ric_norm += ric_up.at({p, q}) * ric.at({p, q});

  {
    // R^{pq} W_{pijq} = R^{pq} R_{pijq} + (1/(n+1)) R_{ip}R_j^p
    //                   + (1/(2(n+1))) R^{pq}R_{pq} Om_{ij}
    Tensor lhs(d, {Var::down, Var::down}), rq(d, {Var::down, Var::down});
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational sw(0), sr(0);
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q) {
            sw += ric_up.at({p, q}) * w.at({p, i, j, q});
            sr += ric_up.at({p, q}) * r4.at({p, i, j, q});
          }
        lhs.at({i, j}) = sw;
        rq.at({i, j}) = sr;
      }
    Tensor rhs = rq + k_ij * Rational(1, n + 1) + om * (ric_norm * Rational(1, 2 * (n + 1)));
    rep.items.push_back(check_equal("riccurv", lhs, rhs));
  }

  {
    // nabla_i rho_j = 2 nabla^p nabla_i R_{jp} + 2 R^{pq} R_{pijq} + 2 R_{ip}R_j^p
    Tensor div2 = contract(flip_index(n2ric, 0, Flip::raise, form), 0, 3);
    Tensor rwq(d, {Var::down, Var::down}), rrq(d, {Var::down, Var::down});
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational sw(0), sr(0);
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q) {
            sw += ric_up.at({p, q}) * w.at({p, i, j, q});
            sr += ric_up.at({p, q}) * r4.at({p, i, j, q});
          }
        rwq.at({i, j}) = sw;
        rrq.at({i, j}) = sr;
      }
    Tensor rhs_a = div2 * Rational(2) + rrq * Rational(2) + k_ij * Rational(2);
    rep.items.push_back(check_equal("nablarho_a", nrho, rhs_a));
    Tensor rhs_b = div2 * Rational(2) + rwq * Rational(2) +
                   (k_ij - om * (ric_norm * Rational(1, 2 * n))) * Rational(2 * n, n + 1);
    rep.items.push_back(check_equal("nablarho_b", nrho, rhs_b));
  }

  rep.items.push_back(check_zero("nabla_omega", covariant_derivative(conn, om)));

  {
    // 2 nabla_{[i} nabla_{j]} X^k = R_{ijp}^k X^p, assembled through the
    // plain tensor calculus for every basis vector.
    bool ok = true;
    for (int k = 0; k < d && ok; ++k) {
      Tensor x = basis_vector(d, k);
      Tensor ddx = covariant_derivative(conn, covariant_derivative(conn, x));
      Tensor anti = sym_part(ddx, {0, 1}, Sym::antisymmetric) * Rational(2);
      for (int i = 0; i < d && ok; ++i)
        for (int j = 0; j < d && ok; ++j)
          for (int l = 0; l < d; ++l)
            if (anti.at({i, j, l}) != rm.at({i, j, k, l})) {
              ok = false;
              break;
            }
    }
    IdentityResult r;
    r.name = "ricci_identity";
    r.pass = ok;
    r.max_discrepancy = ok ? "0" : "nonzero";
    rep.items.push_back(r);
  }

  std::sort(rep.items.begin(), rep.items.end(),
            [](const IdentityResult& a, const IdentityResult& b) { return a.name < b.name; });
  return rep;
}

SectionalForm sectional_form(const Tensor& r_low, const SymplecticForm& omega, const Tensor& x,
                             const Tensor& y) {
  Plane p = plane_kind(omega, x, y);
  if (p.kind != PlaneKind::symplectic)
    throw std::invalid_argument("sectional_form: span is not symplectic");
  const int d = omega.dim();
  Rational oxy = omega.pair(x, y);
  Tensor s(d, {Var::down, Var::down});
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      Rational acc(0);
      for (int i = 0; i < d; ++i) {
        if (x.at({i}) == 0) continue;
        for (int j = 0; j < d; ++j) {
          if (y.at({j}) == 0) continue;
          acc += x.at({i}) * y.at({j}) * r_low.at({i, j, k, l});
        }
      }
      s.at({k, l}) = acc / oxy;
    }
  SectionalForm out{s, Mat(2, 2), FormClass::zero};
  const Tensor* span[2] = {&x, &y};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Rational acc(0);
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) acc += s.at({k, l}) * span[a]->at({k}) * span[b]->at({l});
      out.restricted.at(a, b) = acc;
    }
  // The quadratic form only sees the symmetric part.
  Rational off = (out.restricted.at(0, 1) + out.restricted.at(1, 0)) * Rational(1, 2);
  out.restricted.at(0, 1) = off;
  out.restricted.at(1, 0) = off;
  out.cls = classify_quadratic(out.restricted);
  return out;
}

Rational evaluate_quadratic(const Tensor& s, const Tensor& z) {
  Rational acc(0);
  for (int k = 0; k < s.dim(); ++k) {
    if (z.at({k}) == 0) continue;
    for (int l = 0; l < s.dim(); ++l) acc += s.at({k, l}) * z.at({k}) * z.at({l});
  }
  return acc;
}

Mat ricci_endomorphism(const Tensor& ric, const SymplecticForm& omega) {
  const int d = omega.dim();
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational s(0);
      for (int p = 0; p < d; ++p) s += omega.inverse_bivector().at({j, p}) * ric.at({i, p});
      m.at(j, i) = s;  // (Ex)^j = E_i^j x^i with E_i^j = om^{jp} R_{ip}
    }
  return m;
}

Tensor curvature_from_quadratic(const Tensor& a, const SymplecticForm& omega) {
  const int d = omega.dim();
  const Tensor& om = omega.matrix();
  Tensor r(d, {Var::down, Var::down, Var::down, Var::down});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Rational v =
              (om.at({i, k}) * a.at({l, j}) + om.at({i, l}) * a.at({k, j})) -
              (om.at({j, k}) * a.at({l, i}) + om.at({j, l}) * a.at({k, i})) +
              om.at({i, j}) * a.at({k, l}) * Rational(2);
          r.at({i, j, k, l}) = v;
        }
  return r;
}

std::string to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::flat: return "flat";
    case Trichotomy::nilpotent: return "nilpotent";
    case Trichotomy::complex_type: return "complex";
    case Trichotomy::paracomplex_type: return "paracomplex";
    case Trichotomy::not_constant: return "not_constant";
  }
  return "?";
}

namespace {

bool same_span(const std::vector<std::vector<Rational>>& a,
               const std::vector<std::vector<Rational>>& b) {
  auto ba = span_basis(a), bb = span_basis(b);
  if (ba.size() != bb.size()) return false;
  auto all = ba;
  all.insert(all.end(), bb.begin(), bb.end());
  return span_basis(all).size() == ba.size();
}

}  // namespace

ConstantCurvatureAnalysis constant_curvature_analysis(const CurvatureData& data) {
  const int d = data.omega.dim();
  const int n = d / 2;
  ConstantCurvatureAnalysis out{false, data.ric * Rational(1, 2 * (n + 1)), Rational(0), false,
                                Trichotomy::not_constant, false};
  Tensor w = weyl(data.r_low, data.ric, data.omega);
  out.is_constant = w.is_zero() && data.nabla_ric.is_zero();
  Tensor ric_up = raise_ricci_both(data.ric, data.omega);
  Rational norm(0);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) norm += ric_up.at({p, q}) * data.ric.at({p, q});
  out.r = norm / Rational(2 * n);

  Mat e = ricci_endomorphism(data.ric, data.omega);
  Mat e2 = e * e;
  Mat target(d, d);
  for (int i = 0; i < d; ++i) target.at(i, i) = -out.r;
  out.square_identity = (e2 == target);

  if (!out.is_constant) return out;
  if (data.ric.is_zero()) {
    out.trichotomy = Trichotomy::flat;
  } else if (out.r == 0) {
    out.trichotomy = Trichotomy::nilpotent;
    // ker E = symplectic annihilator of im E
    std::vector<std::vector<Rational>> img, ker;
    Mat em = e;
    for (int j = 0; j < d; ++j) {
      std::vector<Rational> col(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) col[static_cast<std::size_t>(i)] = em.at(i, j);
      img.push_back(std::move(col));
    }
    ker = kernel_basis(em);
    std::vector<Tensor> img_t;
    for (const auto& v : span_basis(img)) img_t.push_back(vector_tensor(d, v));
    std::vector<std::vector<Rational>> ann;
    for (const auto& t : symplectic_annihilator(data.omega, img_t)) {
      std::vector<Rational> row(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) row[static_cast<std::size_t>(i)] = t.at({i});
      ann.push_back(std::move(row));
    }
    out.nilpotent_structure = e2.is_zero() && same_span(ker, ann);
  } else if (out.r > 0) {
    out.trichotomy = Trichotomy::complex_type;
  } else {
    out.trichotomy = Trichotomy::paracomplex_type;
  }
  return out;
}

namespace {

Rational isotropic_eval(const Tensor& r_low, const Tensor& x, const Tensor& y) {
  // omega(R(x,y)y, y) = R_{ijkl} x^i y^j y^k y^l
  Rational acc(0);
  const int d = r_low.dim();
  for (int i = 0; i < d; ++i) {
    if (x.at({i}) == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (y.at({j}) == 0) continue;
      for (int k = 0; k < d; ++k) {
        if (y.at({k}) == 0) continue;
        for (int l = 0; l < d; ++l)
          acc += r_low.at({i, j, k, l}) * x.at({i}) * y.at({j}) * y.at({k}) * y.at({l});
      }
    }
  }
  return acc;
}

bool independent_pair(const Tensor& x, const Tensor& y) {
  std::vector<std::vector<Rational>> rows(2, std::vector<Rational>(static_cast<std::size_t>(x.dim())));
  for (int i = 0; i < x.dim(); ++i) {
    rows[0][static_cast<std::size_t>(i)] = x.at({i});
    rows[1][static_cast<std::size_t>(i)] = y.at({i});
  }
  return span_basis(rows).size() == 2;
}

}  // namespace

IsotropicScan isotropic_sectional_scan(const CurvatureData& data, int trials, std::uint64_t seed) {
  const int d = data.omega.dim();
  if (d < 4) throw std::invalid_argument("isotropic_sectional_scan: needs dim >= 4");
  IsotropicScan out;
  auto consider = [&](const Tensor& x, const Tensor& y) {
    if (data.omega.pair(x, y) != 0 || !independent_pair(x, y)) return;
    ++out.pairs_checked;
    if (out.vanishes && isotropic_eval(data.r_low, x, y) != 0) {
      out.vanishes = false;
      out.witness = {x, y};
    }
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      consider(basis_vector(d, i), basis_vector(d, j));
      for (int k = j + 1; k < d; ++k) {
        if (k == i) continue;
        consider(basis_vector(d, i), basis_vector(d, j) + basis_vector(d, k));
        consider(basis_vector(d, i) + basis_vector(d, j), basis_vector(d, k));
      }
    }
  Rng rng(Rng::mix(seed, 0x49534f54ull));
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> xc(static_cast<std::size_t>(d));
    for (auto& v : xc) v = rng.small_rational();
    Tensor x = vector_tensor(d, xc);
    if (x.is_zero()) continue;
    // Solve omega(x, y) = 0 and take a random kernel combination.
    Mat m(1, d);
    for (int j = 0; j < d; ++j) {
      Rational s(0);
      for (int i = 0; i < d; ++i) s += data.omega.matrix().at({i, j}) * x.at({i});
      m.at(0, j) = s;
    }
    auto ker = kernel_basis(m);
    std::vector<Rational> yc(static_cast<std::size_t>(d), Rational(0));
    for (const auto& k : ker) {
      Rational c = rng.small_rational();
      for (int i = 0; i < d; ++i) yc[static_cast<std::size_t>(i)] += c * k[static_cast<std::size_t>(i)];
    }
    consider(x, vector_tensor(d, yc));
  }
  return out;
}

WitnessReport weyl_witness_tensor(const SymplecticForm& omega, const Tensor& x, const Tensor& y,
                                  const Tensor& u, const Tensor& v) {
  auto expect = [&](const Tensor& a, const Tensor& b, long long val, const char* what) {
    if (omega.pair(a, b) != Rational(val))
      throw std::invalid_argument(std::string("weyl_witness_tensor: pairing pattern violated: ") +
                                  what);
  };
  expect(x, y, 0, "omega(x,y) != 0");
  expect(u, x, 1, "omega(u,x) != 1");
  expect(u, y, 0, "omega(u,y) != 0");
  expect(v, x, 0, "omega(v,x) != 0");
  expect(v, y, 1, "omega(v,y) != 1");
  expect(u, v, 0, "omega(u,v) != 0");
  if (!independent_pair(x, y))
    throw std::invalid_argument("weyl_witness_tensor: x, y dependent");

  Tensor xl = flip_index(x, 0, Flip::lower, omega);
  Tensor yl = flip_index(y, 0, Flip::lower, omega);
  Tensor yyy = tensor_product(tensor_product(yl, yl), yl);
  Tensor xxx = tensor_product(tensor_product(xl, xl), xl);

  WitnessReport rep{tensor_product(xl, yyy) - tensor_product(yl, xxx),
                    tensor_product(tensor_product(tensor_product(xl, yl) - tensor_product(yl, xl), yl), yl),
                    false, false, Rational(0), false, false, false, false, false, false,
                    Rational(0)};

  rep.sym3_last_three_symmetric =
      (sym_part(rep.sym3_witness, {1, 2, 3}, Sym::symmetric) == rep.sym3_witness);
  rep.sym3_trace_free = all_omega_traces_zero(rep.sym3_witness, omega);
  rep.sym3_eval = eval4(rep.sym3_witness, u, v, v, v);
  Tensor defect = sym_part(rep.sym3_witness, {0, 1}, Sym::symmetric);
  rep.sym3_first_pair_antisymmetric = defect.is_zero();
  Tensor closed = tensor_product((tensor_product(xl, yl) + tensor_product(yl, xl)) * Rational(1, 2),
                                 tensor_product(yl, yl) - tensor_product(xl, xl));
  rep.sym3_defect_matches_closed_form = (defect == closed);

  rep.curv_antisym_first_pair =
      sym_part(rep.curvature_witness, {0, 1}, Sym::symmetric).is_zero();
  rep.curv_symmetric_last_pair =
      sym_part(rep.curvature_witness, {2, 3}, Sym::antisymmetric).is_zero();
  rep.curv_bianchi = sym_part(rep.curvature_witness, {0, 1, 2}, Sym::antisymmetric).is_zero();
  rep.curv_trace_free = all_omega_traces_zero(rep.curvature_witness, omega);
  rep.curv_eval = eval4(rep.curvature_witness, u, v, v, v);
  return rep;
}

Rational eval4(const Tensor& t, const Tensor& a, const Tensor& b, const Tensor& c,
               const Tensor& d) {
  Rational acc(0);
  const int dim = t.dim();
  for (int i = 0; i < dim; ++i) {
    if (a.at({i}) == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b.at({j}) == 0) continue;
      for (int k = 0; k < dim; ++k) {
        if (c.at({k}) == 0) continue;
        for (int l = 0; l < dim; ++l)
          acc += t.at({i, j, k, l}) * a.at({i}) * b.at({j}) * c.at({k}) * d.at({l});
      }
    }
  }
  return acc;
}

SectcharResult sectchar_verify(const LeftInvariantConnection& conn, const Tensor& z,
                               const Tensor& x, const Tensor& y) {
  const SymplecticForm& form = conn.alg.omega;
  Plane p = plane_kind(form, x, y);
  if (p.kind != PlaneKind::symplectic)
    throw std::invalid_argument("sectchar_verify: span not symplectic");
  {
    std::vector<std::vector<Rational>> rows;
    for (const Tensor* t : {&x, &y, &z}) {
      std::vector<Rational> row(static_cast<std::size_t>(form.dim()));
      for (int i = 0; i < form.dim(); ++i) row[static_cast<std::size_t>(i)] = t->at({i});
      rows.push_back(std::move(row));
    }
    if (span_basis(rows).size() != 2)
      throw std::invalid_argument("sectchar_verify: z not in span{x,y}");
  }
  SectcharResult out;
  Tensor rm = curvature_mixed(conn);
  Tensor r4 = flip_index(rm, 3, Flip::lower, form);
  out.lhs = eval4(r4, x, y, z, z);
  Tensor xy = conn.alg.bracket(x, y);
  Tensor azz = conn.apply(z, z);
  out.rhs = -form.pair(azz, xy) - form.pair(z, conn.alg.bracket(z, xy)) +
            Rational(2) * form.pair(conn.apply(x, z), conn.apply(y, z));
  out.equal = (out.lhs == out.rhs);
  Mat star = symplectic_adjoint(conn.alg, z);
  out.z_self_adjoint = (star == conn.alg.ad(z));
  out.azz_zero = azz.is_zero();
  out.scurv_z = out.lhs / form.pair(x, y);
  return out;
}

NpcCensus npc_sample(const CurvatureData& data, int trials, std::uint64_t seed) {
  const int d = data.omega.dim();
  Rng rng(Rng::mix(seed, 0x4e504353ull));
  NpcCensus out;
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> xc(static_cast<std::size_t>(d)), yc(static_cast<std::size_t>(d));
    for (auto& v : xc) v = rng.small_rational();
    for (auto& v : yc) v = rng.small_rational();
    Tensor x = vector_tensor(d, xc), y = vector_tensor(d, yc);
    Rational val = data.omega.pair(x, y) * eval4(data.r_low, x, y, x, x);
    if (val < 0)
      ++out.negative;
    else if (val == 0)
      ++out.zero;
    else {
      ++out.positive;
      out.nonpositive = false;
    }
  }
  return out;
}

}  // namespace symcurv
