#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcurv/linalg.hpp"
#include "symcurv/symplectic.hpp"
#include "symcurv/tensor.hpp"

namespace symcurv {

// Lie algebra with left-invariant symplectic form. Structure constants
// c_{ij}^k mean [e_i, e_j] = c_{ij}^k e_k.
struct SymplecticLieAlgebra {
  Tensor c;  // (down, down, up)
  SymplecticForm omega;

  int dim() const { return c.dim(); }
  Tensor bracket(const Tensor& x, const Tensor& y) const;
  // ad(x) as a matrix: column j holds [x, e_j].
  Mat ad(const Tensor& x) const;
  Rational trace_ad(const Tensor& x) const;
  Rational killing(const Tensor& x, const Tensor& y) const;
};

struct ValidationReport {
  bool antisymmetric = false;
  bool jacobi = false;
  bool cocycle = false;  // omega closed as a left-invariant 2-form
  bool nondegenerate = false;
  bool exact = false;    // omega = -alpha([.,.]) solvable for alpha
  std::optional<Tensor> exact_alpha;  // a primitive, when exact
  bool nilpotent = false;
  bool solvable = false;
  std::vector<std::string> errors;  // each failed axiom, with a witness triple

  bool ok() const { return antisymmetric && jacobi && cocycle && nondegenerate; }
};

ValidationReport validate(const SymplecticLieAlgebra& alg);

struct SpecialElements {
  Tensor ell;  // omega(ell, x) = tr ad(x) for all x
  bool unimodular = false;
  bool nilpotent = false;
};

SpecialElements special_elements(const SymplecticLieAlgebra& alg);

// Built-in algebras: "aff1c" (affine transformations of the complex
// line) and "r40" (the 4-dimensional solvable algebra with closed
// non-exact form). Both carry omega = e^1^e^4 + e^2^e^3.
SymplecticLieAlgebra builtin_algebra(const std::string& name);

// Construction helpers, mainly for generating test families.
SymplecticLieAlgebra abelian_algebra(int dim);
SymplecticLieAlgebra aff1r_algebra();          // dim 2: [e1, e2] = e2
SymplecticLieAlgebra heisenberg4_algebra();    // h3 + R, nilpotent
SymplecticLieAlgebra direct_sum(const SymplecticLieAlgebra& a, const SymplecticLieAlgebra& b);
// New basis f_i = P_i^j e_j; structure constants and omega transform along.
SymplecticLieAlgebra transform_basis(const SymplecticLieAlgebra& alg, const Mat& p);

bool is_nilpotent(const SymplecticLieAlgebra& alg);
bool is_solvable(const SymplecticLieAlgebra& alg);

// Endomorphism conventions: E as Mat acts by matrix-vector product;
// as a mixed tensor E_i^j it acts by (Ex)^j = E_i^j x^i.
Tensor endo_to_tensor(const Mat& m);
Mat tensor_to_endo(const Tensor& t);
Tensor apply_endo(const Mat& m, const Tensor& x);

}  // namespace symcurv
