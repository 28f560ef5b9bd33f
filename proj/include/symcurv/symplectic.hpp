#pragma once

#include <string>
#include <vector>

#include "symcurv/linalg.hpp"
#include "symcurv/tensor.hpp"

namespace symcurv {

// Nondegenerate antisymmetric form with cached inverse bivector.
// The inverse satisfies om^{ip} om_{pj} = -delta_j^i, so that raising
// then lowering an index is the identity.
class SymplecticForm {
 public:
  static SymplecticForm from_matrix(const Tensor& matrix);

  // [[0, I], [-I, 0]]: e^m wedge e^{m+n} for m = 1..n.
  static SymplecticForm block_standard(int dim);
  // e^1 wedge e^2 + e^3 wedge e^4 + ...
  static SymplecticForm pairwise_standard(int dim);

  int dim() const { return matrix_.dim(); }
  const Tensor& matrix() const { return matrix_; }       // (down, down)
  const Tensor& inverse_bivector() const { return inv_; }  // (up, up)

  Rational pair(const Tensor& x, const Tensor& y) const;  // omega(x, y)

 private:
  SymplecticForm(Tensor matrix, Tensor inv) : matrix_(std::move(matrix)), inv_(std::move(inv)) {}
  Tensor matrix_;
  Tensor inv_;
};

// Toggles one slot's variance, keeping its horizontal position.
// Lowering: T_i = T^p om_{pi}; raising: T^i = om^{ip} T_p.
Tensor flip_index(const Tensor& t, int slot, Flip dir, const SymplecticForm& form);

enum class PlaneKind { symplectic, isotropic, dependent };

struct Plane {
  Tensor x;
  Tensor y;
  PlaneKind kind;
};

Plane plane_kind(const SymplecticForm& form, const Tensor& x, const Tensor& y);

// P_L(z) = omega(x,y)^{-1} (omega(z,y) x - omega(z,x) y); the projection
// onto span{x,y} along its symplectic complement.
Tensor project_plane(const SymplecticForm& form, const Tensor& x, const Tensor& y, const Tensor& z);

enum class FormClass {
  zero,
  definite_positive,
  definite_negative,
  degenerate_positive,
  degenerate_negative,
  indefinite,
};

std::string to_string(FormClass c);

// SL(2,R)-orbit of a symmetric 2x2 form: sign of the determinant, then
// of the trace on the degenerate orbits.
FormClass classify_quadratic(const Mat& q);

// Basis x_1..x_m, u_1..u_m of the span with omega(u_i, x_j) = delta_ij
// and every other pairing zero. Throws if the span is degenerate.
std::vector<Tensor> symplectic_basis_of_span(const SymplecticForm& form,
                                             const std::vector<Tensor>& vectors);

// Given an isotropic independent pair (x, y), vectors (u, v) with
// omega(u,x) = 1, omega(u,y) = 0, omega(v,x) = 0, omega(v,y) = 1,
// omega(u,v) = 0.
std::pair<Tensor, Tensor> complete_isotropic_pair(const SymplecticForm& form, const Tensor& x,
                                                  const Tensor& y);

// {v : omega(v, s) = 0 for all s in the span of the given vectors}.
std::vector<Tensor> symplectic_annihilator(const SymplecticForm& form,
                                           const std::vector<Tensor>& span);

}  // namespace symcurv
