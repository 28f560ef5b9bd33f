#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "symcurv/curvature.hpp"

namespace symcurv {

// Polynomial in nvars variables truncated at total degree <= bound;
// products drop the higher-order terms.
class JetPoly {
 public:
  JetPoly(int nvars, int bound) : nvars_(nvars), bound_(bound) {}
  static JetPoly constant(int nvars, int bound, const Rational& c);
  static JetPoly variable(int nvars, int bound, int i);

  int nvars() const { return nvars_; }
  int bound() const { return bound_; }

  Rational coef(const std::vector<int>& exps) const;
  void set_coef(const std::vector<int>& exps, const Rational& c);

  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  JetPoly& operator+=(const JetPoly& o);
  JetPoly& operator-=(const JetPoly& o);
  friend JetPoly operator+(JetPoly a, const JetPoly& b) { return a += b; }
  friend JetPoly operator-(JetPoly a, const JetPoly& b) { return a -= b; }
  friend JetPoly operator*(const JetPoly& a, const JetPoly& b);
  friend JetPoly operator*(JetPoly a, const Rational& s);
  friend bool operator==(const JetPoly& a, const JetPoly& b);

  JetPoly derivative(int i) const;
  Rational at_zero() const { return coef(std::vector<int>(static_cast<std::size_t>(nvars_), 0)); }
  // Sum of the terms of exact total degree k.
  JetPoly homogeneous_part(int k) const;
  bool is_zero() const;
  bool zero_through_order(int k) const;

 private:
  int nvars_;
  int bound_;
  std::map<std::vector<int>, Rational> terms_;  // exponent vector -> coefficient, no zeros
};

// Degree-<=3 polynomial map of symplectic affine spaces, fixing the
// origin, with the pairwise standard form on the ambient space. The
// first 2k ambient coordinates are treated as the inclusion block when
// generating random embeddings.
struct PolyEmbedding {
  int k = 0;  // domain dim 2k
  int n = 0;  // ambient dim 2n
  std::vector<JetPoly> components;  // 2n polynomials in 2k variables, no constant term
  int domain_dim() const { return 2 * k; }
  int ambient_dim() const { return 2 * n; }
};

PolyEmbedding make_embedding(int k, int n, std::vector<JetPoly> components);

// Inclusion + seeded quadratic/cubic perturbations of the normal
// components; symplectic at the origin by construction.
PolyEmbedding random_cubic_embedding(int k, int n, std::uint64_t seed);

// Second + first fundamental data at the origin, with the jets needed
// for the curvature there.
struct SecondFundamentalData {
  int k = 0, n = 0;
  std::vector<JetPoly> omega_jet;  // row-major 2k x 2k, degree <= 2
  SymplecticForm domain_form;      // omega at the origin
  std::vector<JetPoly> christoffel;  // row-major [i][j][p], degree <= 1
  Tensor gamma0;   // (down,down,up) at the origin
  Tensor gamma1;   // (down deriv, down, down, up): d_a Gamma_{ij}^p at 0
  std::vector<std::vector<std::vector<Rational>>> pi0;  // Pi_{ij}^A at 0
  Tensor ind0;     // Pi_{ij}^A phi_k^B Om_AB at 0 (must vanish)
  bool torsion_free = false;
  bool preserves_omega_through_order1 = false;
};

// Pullback phi^*(Omega) as a jet of 2-forms; throws when the pullback is
// degenerate at the origin or the differential drops rank.
std::vector<JetPoly> pullback_two_form(const PolyEmbedding& phi);

SecondFundamentalData induced_connection_and_ii(const PolyEmbedding& phi);

struct SmcTensors {
  Tensor pi4;   // Pi_{ijkl} = 2 Pi_{i(k}^A Pi_{l)j}^B Om_AB
  Tensor smc2;  // pure trace part
  Tensor smc4;  // trace-free part
  bool symmetries_ok = false;  // antisym (ij), sym (kl), first Bianchi
  bool traces_ok = false;      // om^{pq}Pi_{pijq} = smc2, om^{pq}Pi_{pqij} = 2 smc2, smc4 trace-free
};

SmcTensors smc_tensors(const SecondFundamentalData& data);

struct HereditarySample {
  Rational omega_xy;
  Rational residual;          // scurv^N(Z) + Pi_{ijkl} X^i Y^j Z^k Z^l / omega(X,Y)
  Rational printed_residual;  // scurv^N(Z) + 2 Pi_{ijkl} X^i Y^j Z^k Z^l
};

struct GaussReport {
  Tensor rbar_mixed;   // induced curvature at the origin
  Tensor rbar_low;
  Tensor rbar_ricci;
  SmcTensors smc;
  bool ind_zero = false;
  bool gauss_exact = false;          // rbar_low + (Gauss quadratic term) = 0
  bool gauss_term_matches_pi4 = false;
  bool ricci_is_minus_smc = false;
  std::vector<HereditarySample> hereditary;
  bool hereditary_exact = false;     // every sample residual is exactly zero
  bool torsion_free = false;
  bool preserves_omega = false;
};

GaussReport gauss_check(const PolyEmbedding& phi, int plane_samples, std::uint64_t seed);

// Pointwise constant-curvature Gauss contraction: given ambient Ricci P,
// a differential, and a second fundamental form with ind = 0, defines
// the induced curvature through the Gauss relation and verifies
// (k+1) phi^*(P) = (n+1)(ricci(Rbar) + smc).
struct CricsubResult {
  bool pullback_matches = false;   // phi^* ambient omega = domain omega
  bool ind_zero = false;
  bool rbar_symmetries_ok = false;
  Tensor lhs;  // (k+1) phi^*(P)
  Tensor rhs;  // (n+1)(ricci + smc)
  bool identity_holds = false;
};

CricsubResult cricsub_pointwise(const SymplecticForm& ambient_omega, const Tensor& ambient_ricci,
                                const Mat& dphi, const SymplecticForm& domain_omega,
                                const std::vector<std::vector<std::vector<Rational>>>& pi);

// Random second fundamental form with ind = 0 for the given differential.
std::vector<std::vector<std::vector<Rational>>> random_normal_ii(const SymplecticForm& ambient_omega,
                                                                 const Mat& dphi, int domain_dim,
                                                                 std::uint64_t seed);

}  // namespace symcurv
