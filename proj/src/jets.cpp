#include "symcurv/jets.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "symcurv/rng.hpp"

namespace symcurv {

JetPoly JetPoly::constant(int nvars, int bound, const Rational& c) {
  JetPoly p(nvars, bound);
  if (c != 0) p.terms_[std::vector<int>(static_cast<std::size_t>(nvars), 0)] = c;
  return p;
}

JetPoly JetPoly::variable(int nvars, int bound, int i) {
  JetPoly p(nvars, bound);
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  if (bound >= 1) p.terms_[e] = Rational(1);
  return p;
}

Rational JetPoly::coef(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void JetPoly::set_coef(const std::vector<int>& exps, const Rational& c) {
  int deg = 0;
  for (int e : exps) deg += e;
  if (deg > bound_) return;
  if (c == 0)
    terms_.erase(exps);
  else
    terms_[exps] = c;
}

JetPoly& JetPoly::operator+=(const JetPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

JetPoly& JetPoly::operator-=(const JetPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = -c;
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

JetPoly operator*(const JetPoly& a, const JetPoly& b) {
  JetPoly out(a.nvars_, std::min(a.bound_, b.bound_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(ea.size());
      int deg = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        deg += e[i];
      }
      if (deg > out.bound_) continue;
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        Rational v = ca * cb;
        if (v != 0) out.terms_[e] = v;
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

JetPoly operator*(JetPoly a, const Rational& s) {
  if (s == 0) return JetPoly(a.nvars_, a.bound_);
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

bool operator==(const JetPoly& a, const JetPoly& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

JetPoly JetPoly::derivative(int i) const {
  JetPoly out(nvars_, bound_);
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<std::size_t>(i)] == 0) continue;
    std::vector<int> d = e;
    --d[static_cast<std::size_t>(i)];
    out.terms_[d] = c * Rational(e[static_cast<std::size_t>(i)]);
  }
  return out;
}

JetPoly JetPoly::homogeneous_part(int k) const {
  JetPoly out(nvars_, bound_);
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (int x : e) deg += x;
    if (deg == k) out.terms_[e] = c;
  }
  return out;
}

bool JetPoly::is_zero() const { return terms_.empty(); }

bool JetPoly::zero_through_order(int k) const {
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (int x : e) deg += x;
    if (deg <= k && c != 0) return false;
  }
  return true;
}

PolyEmbedding make_embedding(int k, int n, std::vector<JetPoly> components) {
  if (k < 1 || n < k) throw std::invalid_argument("embedding: need 1 <= k <= n");
  if (static_cast<int>(components.size()) != 2 * n)
    throw std::invalid_argument("embedding: wrong component count");
  for (const auto& p : components) {
    if (p.nvars() != 2 * k) throw std::invalid_argument("embedding: wrong variable count");
    if (p.at_zero() != 0) throw std::invalid_argument("embedding: components must fix the origin");
  }
  return {k, n, std::move(components)};
}

namespace {

constexpr int kJetBound = 6;  // high enough that polynomial products never truncate

void monomials_of_degree(int nvars, int deg, std::vector<std::vector<int>>& out) {
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  // Lexicographic enumeration of exponent vectors with total degree deg.
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == nvars - 1) {
      e[static_cast<std::size_t>(pos)] = left;
      out.push_back(e);
      return;
    }
    for (int d = left; d >= 0; --d) {
      e[static_cast<std::size_t>(pos)] = d;
      rec(pos + 1, left - d);
    }
  };
  if (nvars == 0) return;
  rec(0, deg);
}

std::vector<std::vector<JetPoly>> differential(const PolyEmbedding& phi) {
  const int dk = phi.domain_dim(), dn = phi.ambient_dim();
  std::vector<std::vector<JetPoly>> d(static_cast<std::size_t>(dk));
  for (int i = 0; i < dk; ++i) {
    d[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(dn));
    for (int a = 0; a < dn; ++a)
      d[static_cast<std::size_t>(i)].push_back(phi.components[static_cast<std::size_t>(a)].derivative(i));
  }
  return d;
}

Mat differential_at_zero(const std::vector<std::vector<JetPoly>>& d, int dk, int dn) {
  Mat m(dn, dk);
  for (int a = 0; a < dn; ++a)
    for (int i = 0; i < dk; ++i) m.at(a, i) = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)].at_zero();
  return m;
}

}  // namespace

PolyEmbedding random_cubic_embedding(int k, int n, std::uint64_t seed) {
  const int dk = 2 * k, dn = 2 * n;
  Rng rng(Rng::mix(seed, 0x454d4245ull));
  std::vector<std::vector<int>> monos;
  monomials_of_degree(dk, 2, monos);
  monomials_of_degree(dk, 3, monos);
  std::vector<JetPoly> comps;
  for (int a = 0; a < dn; ++a) {
    if (a < dk) {
      comps.push_back(JetPoly::variable(dk, kJetBound, a));
    } else {
      JetPoly p(dk, kJetBound);
      for (const auto& e : monos) p.set_coef(e, rng.small_rational());
      comps.push_back(std::move(p));
    }
  }
  return make_embedding(k, n, std::move(comps));
}

std::vector<JetPoly> pullback_two_form(const PolyEmbedding& phi) {
  const int dk = phi.domain_dim(), dn = phi.ambient_dim();
  SymplecticForm ambient = SymplecticForm::pairwise_standard(dn);
  auto d = differential(phi);
  if (rank(differential_at_zero(d, dk, dn)) != dk)
    throw std::invalid_argument("pullback: differential is rank-deficient at the origin");
  std::vector<JetPoly> omega(static_cast<std::size_t>(dk * dk), JetPoly(dk, kJetBound));
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) {
      JetPoly acc(dk, kJetBound);
      for (int a = 0; a < dn; ++a)
        for (int b = 0; b < dn; ++b) {
          const Rational& oab = ambient.matrix().at({a, b});
          if (oab == 0) continue;
          acc += d[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                 d[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)] * oab;
        }
      // Degree <= 2 is all the connection jets downstream consume.
      JetPoly trunc(dk, kJetBound);
      for (int deg = 0; deg <= 2; ++deg) trunc += acc.homogeneous_part(deg);
      omega[static_cast<std::size_t>(i * dk + j)] = std::move(trunc);
    }
  // Nondegeneracy at the origin.
  Tensor om0(dk, {Var::down, Var::down});
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) om0.at({i, j}) = omega[static_cast<std::size_t>(i * dk + j)].at_zero();
  SymplecticForm::from_matrix(om0);  // throws when degenerate
  return omega;
}

SecondFundamentalData induced_connection_and_ii(const PolyEmbedding& phi) {
  const int dk = phi.domain_dim(), dn = phi.ambient_dim();
  SymplecticForm ambient = SymplecticForm::pairwise_standard(dn);
  auto d = differential(phi);
  std::vector<JetPoly> omega_jet = pullback_two_form(phi);

  Tensor om0(dk, {Var::down, Var::down});
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) om0.at({i, j}) = omega_jet[static_cast<std::size_t>(i * dk + j)].at_zero();
  SecondFundamentalData out{phi.k,
                            phi.n,
                            std::move(omega_jet),
                            SymplecticForm::from_matrix(om0),
                            {},
                            Tensor(dk, {Var::down, Var::down, Var::up}),
                            Tensor(dk, {Var::down, Var::down, Var::down, Var::up}),
                            {},
                            Tensor(dk, {Var::down, Var::down, Var::down}),
                            false,
                            false};

  // Inverse bivector jet to order 1: W0 from the form, W1 = W0 M1 W0.
  Mat w0(dk, dk);
  for (int p = 0; p < dk; ++p)
    for (int q = 0; q < dk; ++q) w0.at(p, q) = out.domain_form.inverse_bivector().at({p, q});
  std::vector<JetPoly> w(static_cast<std::size_t>(dk * dk), JetPoly(dk, kJetBound));
  for (int p = 0; p < dk; ++p)
    for (int q = 0; q < dk; ++q) {
      JetPoly entry = JetPoly::constant(dk, kJetBound, w0.at(p, q));
      for (int r = 0; r < dk; ++r)
        for (int s = 0; s < dk; ++s) {
          JetPoly m1 = out.omega_jet[static_cast<std::size_t>(r * dk + s)].homogeneous_part(1);
          if (!m1.is_zero()) entry += m1 * (w0.at(p, r) * w0.at(s, q));
        }
      w[static_cast<std::size_t>(p * dk + q)] = std::move(entry);
    }

  // b_{ijk} = Om_AB d_i d_j phi^A d_k phi^B, exact; Gamma = om^{pk} b_{ijk}
  // kept to order 1.
  std::vector<JetPoly> hess(static_cast<std::size_t>(dk * dk * dn), JetPoly(dk, kJetBound));
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j)
      for (int a = 0; a < dn; ++a)
        hess[static_cast<std::size_t>((i * dk + j) * dn + a)] =
            d[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)].derivative(j);
  auto b_ijk = [&](int i, int j, int k) {
    JetPoly acc(dk, kJetBound);
    for (int a = 0; a < dn; ++a)
      for (int bb = 0; bb < dn; ++bb) {
        const Rational& oab = ambient.matrix().at({a, bb});
        if (oab == 0) continue;
        acc += hess[static_cast<std::size_t>((i * dk + j) * dn + a)] *
               d[static_cast<std::size_t>(k)][static_cast<std::size_t>(bb)] * oab;
      }
    return acc;
  };

  out.christoffel.assign(static_cast<std::size_t>(dk * dk * dk), JetPoly(dk, kJetBound));
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j)
      for (int p = 0; p < dk; ++p) {
        JetPoly acc(dk, kJetBound);
        for (int k = 0; k < dk; ++k) acc += w[static_cast<std::size_t>(p * dk + k)] * b_ijk(i, j, k);
        JetPoly trunc(dk, kJetBound);
        trunc += acc.homogeneous_part(0);
        trunc += acc.homogeneous_part(1);
        out.christoffel[static_cast<std::size_t>((i * dk + j) * dk + p)] = std::move(trunc);
      }

  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j)
      for (int p = 0; p < dk; ++p) {
        const JetPoly& g = out.christoffel[static_cast<std::size_t>((i * dk + j) * dk + p)];
        out.gamma0.at({i, j, p}) = g.at_zero();
        for (int a = 0; a < dk; ++a) {
          std::vector<int> e(static_cast<std::size_t>(dk), 0);
          e[static_cast<std::size_t>(a)] = 1;
          out.gamma1.at({a, i, j, p}) = g.coef(e);
        }
      }

  out.torsion_free = true;
  for (int i = 0; i < dk && out.torsion_free; ++i)
    for (int j = 0; j < dk; ++j)
      for (int p = 0; p < dk; ++p)
        if (!(out.christoffel[static_cast<std::size_t>((i * dk + j) * dk + p)] ==
              out.christoffel[static_cast<std::size_t>((j * dk + i) * dk + p)])) {
          out.torsion_free = false;
          break;
        }

  // Pi at the origin, and ind through order 1 as jets.
  out.pi0.assign(static_cast<std::size_t>(dk),
                 std::vector<std::vector<Rational>>(
                     static_cast<std::size_t>(dk),
                     std::vector<Rational>(static_cast<std::size_t>(dn), Rational(0))));
  std::vector<JetPoly> pi_jet(static_cast<std::size_t>(dk * dk * dn), JetPoly(dk, kJetBound));
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j)
      for (int a = 0; a < dn; ++a) {
        JetPoly acc = hess[static_cast<std::size_t>((i * dk + j) * dn + a)];
        for (int p = 0; p < dk; ++p)
          acc -= out.christoffel[static_cast<std::size_t>((i * dk + j) * dk + p)] *
                 d[static_cast<std::size_t>(p)][static_cast<std::size_t>(a)];
        out.pi0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(a)] =
            acc.at_zero();
        pi_jet[static_cast<std::size_t>((i * dk + j) * dn + a)] = std::move(acc);
      }

  bool ind_ok = true;
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j)
      for (int k = 0; k < dk; ++k) {
        JetPoly acc(dk, kJetBound);
        for (int a = 0; a < dn; ++a)
          for (int bb = 0; bb < dn; ++bb) {
            const Rational& oab = ambient.matrix().at({a, bb});
            if (oab == 0) continue;
            acc += pi_jet[static_cast<std::size_t>((i * dk + j) * dn + a)] *
                   d[static_cast<std::size_t>(k)][static_cast<std::size_t>(bb)] * oab;
          }
        out.ind0.at({i, j, k}) = acc.at_zero();
        if (!acc.zero_through_order(1)) ind_ok = false;
      }
  if (!ind_ok || !out.ind0.is_zero())
    throw std::runtime_error("induced connection: tangential part of Pi does not vanish");

  // nabla-bar omega through order 1.
  out.preserves_omega_through_order1 = true;
  for (int i = 0; i < dk && out.preserves_omega_through_order1; ++i)
    for (int j = 0; j < dk && out.preserves_omega_through_order1; ++j)
      for (int k = 0; k < dk; ++k) {
        JetPoly acc = out.omega_jet[static_cast<std::size_t>(j * dk + k)].derivative(i);
        for (int p = 0; p < dk; ++p) {
          acc -= out.christoffel[static_cast<std::size_t>((i * dk + j) * dk + p)] *
                 out.omega_jet[static_cast<std::size_t>(p * dk + k)];
          acc -= out.christoffel[static_cast<std::size_t>((i * dk + k) * dk + p)] *
                 out.omega_jet[static_cast<std::size_t>(j * dk + p)];
        }
        if (!acc.zero_through_order(1)) {
          out.preserves_omega_through_order1 = false;
          break;
        }
      }
  return out;
}

namespace {

Tensor pi4_from(const std::vector<std::vector<std::vector<Rational>>>& pi,
                const SymplecticForm& ambient, int dk, int dn) {
  Tensor p4(dk, {Var::down, Var::down, Var::down, Var::down});
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j)
      for (int k = 0; k < dk; ++k)
        for (int l = 0; l < dk; ++l) {
          Rational acc(0);
          for (int a = 0; a < dn; ++a)
            for (int b = 0; b < dn; ++b) {
              const Rational& oab = ambient.matrix().at({a, b});
              if (oab == 0) continue;
              // Pi_{ijkl} = Pi_{ik}^A Pi_{lj}^B Om_AB + Pi_{il}^A Pi_{kj}^B Om_AB
              acc += (pi[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)][static_cast<std::size_t>(a)] *
                          pi[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)][static_cast<std::size_t>(b)] +
                      pi[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)][static_cast<std::size_t>(a)] *
                          pi[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)][static_cast<std::size_t>(b)]) *
                     oab;
            }
          p4.at({i, j, k, l}) = acc;
        }
  return p4;
}

Tensor smc2_from(const std::vector<std::vector<std::vector<Rational>>>& pi,
                 const SymplecticForm& ambient, const SymplecticForm& domain, int dk, int dn) {
  Tensor s(dk, {Var::down, Var::down});
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) {
      Rational acc(0);
      for (int a = 0; a < dk; ++a)
        for (int b = 0; b < dk; ++b) {
          const Rational& w = domain.inverse_bivector().at({a, b});
          if (w == 0) continue;
          for (int aa = 0; aa < dn; ++aa)
            for (int bb = 0; bb < dn; ++bb) {
              const Rational& oab = ambient.matrix().at({aa, bb});
              if (oab == 0) continue;
              acc += w * oab *
                     pi[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)][static_cast<std::size_t>(aa)] *
                     pi[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)][static_cast<std::size_t>(bb)];
            }
        }
      s.at({i, j}) = acc;
    }
  return s;
}

bool omega_traces_vanish_local(const Tensor& t, const SymplecticForm& form) {
  for (int a = 0; a < t.rank(); ++a)
    for (int b = a + 1; b < t.rank(); ++b)
      if (!contract(flip_index(t, a, Flip::raise, form), a, b).is_zero()) return false;
  return true;
}

SmcTensors smc_from(const std::vector<std::vector<std::vector<Rational>>>& pi,
                    const SymplecticForm& domain, int k, int n) {
  const int dk = 2 * k, dn = 2 * n;
  SymplecticForm ambient = SymplecticForm::pairwise_standard(dn);
  SmcTensors out{pi4_from(pi, ambient, dk, dn), smc2_from(pi, ambient, domain, dk, dn),
                 Tensor(dk, {Var::down, Var::down, Var::down, Var::down}), false, false};
  out.smc4 = out.pi4 - curvature_from_quadratic(out.smc2, domain) * Rational(1, 2 * (k + 1));

  out.symmetries_ok = sym_part(out.pi4, {0, 1}, Sym::symmetric).is_zero() &&
                      sym_part(out.pi4, {2, 3}, Sym::antisymmetric).is_zero() &&
                      sym_part(out.pi4, {0, 1, 2}, Sym::antisymmetric).is_zero();

  // om^{pq} Pi_{pijq} = smc_{ij} and om^{pq} Pi_{pqij} = 2 smc_{ij}.
  const int d = dk;
  Tensor t1(d, {Var::down, Var::down}), t2(d, {Var::down, Var::down});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational a1(0), a2(0);
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
          const Rational& w = domain.inverse_bivector().at({p, q});
          if (w == 0) continue;
          a1 += w * out.pi4.at({p, i, j, q});
          a2 += w * out.pi4.at({p, q, i, j});
        }
      t1.at({i, j}) = a1;
      t2.at({i, j}) = a2;
    }
  out.traces_ok = (t1 == out.smc2) && (t2 == out.smc2 * Rational(2)) &&
                  sym_part(out.smc2, {0, 1}, Sym::antisymmetric).is_zero() &&
                  omega_traces_vanish_local(out.smc4, domain);
  return out;
}

}  // namespace

SmcTensors smc_tensors(const SecondFundamentalData& data) {
  return smc_from(data.pi0, data.domain_form, data.k, data.n);
}

GaussReport gauss_check(const PolyEmbedding& phi, int plane_samples, std::uint64_t seed) {
  const int dk = phi.domain_dim(), dn = phi.ambient_dim();
  SymplecticForm ambient = SymplecticForm::pairwise_standard(dn);
  SecondFundamentalData data = induced_connection_and_ii(phi);
  GaussReport rep{Tensor(dk, {Var::down, Var::down, Var::down, Var::up}),
                  Tensor(dk, {Var::down, Var::down, Var::down, Var::down}),
                  Tensor(dk, {Var::down, Var::down}),
                  smc_tensors(data),
                  data.ind0.is_zero(),
                  false,
                  false,
                  false,
                  {},
                  false,
                  data.torsion_free,
                  data.preserves_omega_through_order1};

  // Rbar_{ijk}^l = d_i Gamma_{jk}^l - d_j Gamma_{ik}^l
  //               + Gamma_{jk}^p Gamma_{ip}^l - Gamma_{ik}^p Gamma_{jp}^l at 0.
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j)
      for (int k = 0; k < dk; ++k)
        for (int l = 0; l < dk; ++l) {
          Rational acc = data.gamma1.at({i, j, k, l}) - data.gamma1.at({j, i, k, l});
          for (int p = 0; p < dk; ++p)
            acc += data.gamma0.at({j, k, p}) * data.gamma0.at({i, p, l}) -
                   data.gamma0.at({i, k, p}) * data.gamma0.at({j, p, l});
          rep.rbar_mixed.at({i, j, k, l}) = acc;
        }
  rep.rbar_low = flip_index(rep.rbar_mixed, 3, Flip::lower, data.domain_form);
  rep.rbar_ricci = ricci_from_mixed(rep.rbar_mixed);

  // Gauss: Rbar_{ijk}^p om_{pl} + 2 Pi_{k[i}^A Pi_{j]l}^B Om_AB = 0 (flat ambient).
  Tensor gauss_term(dk, {Var::down, Var::down, Var::down, Var::down});
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j)
      for (int k = 0; k < dk; ++k)
        for (int l = 0; l < dk; ++l) {
          Rational acc(0);
          for (int a = 0; a < dn; ++a)
            for (int b = 0; b < dn; ++b) {
              const Rational& oab = ambient.matrix().at({a, b});
              if (oab == 0) continue;
              acc += (data.pi0[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                          data.pi0[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)][static_cast<std::size_t>(b)] -
                      data.pi0[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)][static_cast<std::size_t>(a)] *
                          data.pi0[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)][static_cast<std::size_t>(b)]) *
                     oab;
            }
          gauss_term.at({i, j, k, l}) = acc;
        }
  rep.gauss_exact = (rep.rbar_low + gauss_term).is_zero();
  rep.gauss_term_matches_pi4 = (gauss_term == rep.smc.pi4);
  rep.ricci_is_minus_smc = (rep.rbar_ricci == -rep.smc.smc2);

  // Hereditary samples on symplectic planes of the domain.
  Rng rng(Rng::mix(seed, 0x48455245ull));
  int made = 0, attempts = 0;
  while (made < plane_samples && attempts < plane_samples * 50) {
    ++attempts;
    std::vector<Rational> xc(static_cast<std::size_t>(dk)), yc(static_cast<std::size_t>(dk));
    for (auto& v : xc) v = rng.small_rational();
    for (auto& v : yc) v = rng.small_rational();
    Tensor x = vector_tensor(dk, xc), y = vector_tensor(dk, yc);
    Rational oxy = data.domain_form.pair(x, y);
    if (oxy == 0) continue;
    Tensor z = x * rng.small_rational() + y * rng.small_rational();
    if (z.is_zero()) continue;
    Rational scurv = eval4(rep.rbar_low, x, y, z, z) / oxy;
    Rational t = eval4(rep.smc.pi4, x, y, z, z);
    rep.hereditary.push_back({oxy, scurv + t / oxy, scurv + Rational(2) * t});
    ++made;
  }
  rep.hereditary_exact =
      !rep.hereditary.empty() &&
      std::all_of(rep.hereditary.begin(), rep.hereditary.end(),
                  [](const HereditarySample& s) { return s.residual == 0; });
  return rep;
}

std::vector<std::vector<std::vector<Rational>>> random_normal_ii(const SymplecticForm& ambient_omega,
                                                                 const Mat& dphi, int domain_dim,
                                                                 std::uint64_t seed) {
  const int dn = ambient_omega.dim();
  std::vector<Tensor> tangent;
  for (int i = 0; i < domain_dim; ++i) {
    std::vector<Rational> col(static_cast<std::size_t>(dn));
    for (int a = 0; a < dn; ++a) col[static_cast<std::size_t>(a)] = dphi.at(a, i);
    tangent.push_back(vector_tensor(dn, col));
  }
  auto normal = symplectic_annihilator(ambient_omega, tangent);
  Rng rng(Rng::mix(seed, 0x4e4f524dull));
  std::vector<std::vector<std::vector<Rational>>> pi(
      static_cast<std::size_t>(domain_dim),
      std::vector<std::vector<Rational>>(static_cast<std::size_t>(domain_dim),
                                         std::vector<Rational>(static_cast<std::size_t>(dn), Rational(0))));
  for (int i = 0; i < domain_dim; ++i)
    for (int j = i; j < domain_dim; ++j) {
      Tensor v(dn, {Var::up});
      for (const auto& b : normal) v += b * rng.small_rational();
      for (int a = 0; a < dn; ++a) {
        pi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(a)] = v.at({a});
        pi[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] = v.at({a});
      }
    }
  return pi;
}

CricsubResult cricsub_pointwise(const SymplecticForm& ambient_omega, const Tensor& ambient_ricci,
                                const Mat& dphi, const SymplecticForm& domain_omega,
                                const std::vector<std::vector<std::vector<Rational>>>& pi) {
  const int dn = ambient_omega.dim(), dk = domain_omega.dim();
  const int n = dn / 2, k = dk / 2;
  if (dphi.rows() != dn || dphi.cols() != dk)
    throw std::invalid_argument("cricsub: inconsistent dimensions");
  CricsubResult out{false, false, false, Tensor(dk, {Var::down, Var::down}),
                    Tensor(dk, {Var::down, Var::down}), false};

  // phi^* ambient omega must equal the domain omega.
  out.pullback_matches = true;
  for (int i = 0; i < dk && out.pullback_matches; ++i)
    for (int j = 0; j < dk; ++j) {
      Rational acc(0);
      for (int a = 0; a < dn; ++a)
        for (int b = 0; b < dn; ++b)
          acc += ambient_omega.matrix().at({a, b}) * dphi.at(a, i) * dphi.at(b, j);
      if (acc != domain_omega.matrix().at({i, j})) {
        out.pullback_matches = false;
        break;
      }
    }

  out.ind_zero = true;
  for (int i = 0; i < dk && out.ind_zero; ++i)
    for (int j = 0; j < dk && out.ind_zero; ++j)
      for (int kk = 0; kk < dk; ++kk) {
        Rational acc(0);
        for (int a = 0; a < dn; ++a)
          for (int b = 0; b < dn; ++b)
            acc += ambient_omega.matrix().at({a, b}) *
                   pi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(a)] *
                   dphi.at(b, kk);
        if (acc != 0) {
          out.ind_zero = false;
          break;
        }
      }

  // Ambient curvature in the Ricci-type normal form, pulled back.
  Tensor ambient_r4 =
      curvature_from_quadratic(ambient_ricci * Rational(1, 2 * (n + 1)), ambient_omega);
  Tensor pulled(dk, {Var::down, Var::down, Var::down, Var::down});
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j)
      for (int kk = 0; kk < dk; ++kk)
        for (int l = 0; l < dk; ++l) {
          Rational acc(0);
          for (int a = 0; a < dn; ++a)
            for (int b = 0; b < dn; ++b)
              for (int cq = 0; cq < dn; ++cq)
                for (int dq = 0; dq < dn; ++dq) {
                  const Rational& rv = ambient_r4.at({a, b, cq, dq});
                  if (rv == 0) continue;
                  acc += rv * dphi.at(a, i) * dphi.at(b, j) * dphi.at(cq, kk) * dphi.at(dq, l);
                }
          pulled.at({i, j, kk, l}) = acc;
        }

  SymplecticForm ambient = ambient_omega;
  Tensor gauss_term = pi4_from(pi, ambient, dk, dn);
  Tensor rbar_low = pulled - gauss_term;
  out.rbar_symmetries_ok = sym_part(rbar_low, {0, 1}, Sym::symmetric).is_zero() &&
                           sym_part(rbar_low, {2, 3}, Sym::antisymmetric).is_zero() &&
                           sym_part(rbar_low, {0, 1, 2}, Sym::antisymmetric).is_zero();
  Tensor rbar_ric = ricci_from_mixed(lowered_to_mixed(rbar_low, domain_omega));
  Tensor smc2 = smc2_from(pi, ambient, domain_omega, dk, dn);

  Tensor pulled_ric(dk, {Var::down, Var::down});
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) {
      Rational acc(0);
      for (int a = 0; a < dn; ++a)
        for (int b = 0; b < dn; ++b) acc += ambient_ricci.at({a, b}) * dphi.at(a, i) * dphi.at(b, j);
      pulled_ric.at({i, j}) = acc;
    }
  out.lhs = pulled_ric * Rational(k + 1);
  out.rhs = (rbar_ric + smc2) * Rational(n + 1);
  out.identity_holds = (out.lhs == out.rhs);
  return out;
}

}  // namespace symcurv
