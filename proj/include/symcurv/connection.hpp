#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symcurv/lie.hpp"

namespace symcurv {

// Left-invariant connection, as the coefficient tensor A_{ij}^k with
// A(e_i)e_j = A_{ij}^k e_k. Torsion-free means A(x)y - A(y)x = [x,y];
// symplectic means omega(A(x)y, z) + omega(y, A(x)z) = 0.
struct LeftInvariantConnection {
  SymplecticLieAlgebra alg;
  Tensor a;  // (down, down, up)

  int dim() const { return alg.dim(); }
  Tensor apply(const Tensor& x, const Tensor& y) const;  // A(x)y
  Mat coeff_endo(const Tensor& x) const;                 // A(x) as a matrix
};

// ad(x)* defined by omega(ad(x)* y, z) = -omega(y, ad(x) z).
Mat symplectic_adjoint(const SymplecticLieAlgebra& alg, const Tensor& x);

// A(a)b = (1/3)(ad(a) + ad(a)*) b; torsion-free and symplectic.
LeftInvariantConnection canonical_connection(const SymplecticLieAlgebra& alg);

// Adds (2/3) om^{kp} (nabla-bar omega)_{(ij)p} to a torsion-free
// coefficient tensor, producing a symplectic one.
LeftInvariantConnection symmetrize_connection(const SymplecticLieAlgebra& alg, const Tensor& abar);

// Canonical connection plus a totally symmetric lowered perturbation
// Pi_{ijk}; the space of symplectic connections is an affine space over
// such tensors.
LeftInvariantConnection perturbed_connection(const SymplecticLieAlgebra& alg,
                                             const Tensor& pi_sym);

// Seeded perturbation with entries in [-3, 3], denominators at most 4.
LeftInvariantConnection random_symplectic_connection(const SymplecticLieAlgebra& alg,
                                                     std::uint64_t seed);

// Throws unless torsion-free and symplectic, checked over all basis triples.
void validate_connection(const LeftInvariantConnection& conn);
bool is_torsion_free(const SymplecticLieAlgebra& alg, const Tensor& abar);

// Components of a left-invariant tensor field are constant, so the
// covariant derivative acts through the coefficients alone; the new
// derivative slot comes first.
Tensor covariant_derivative(const LeftInvariantConnection& conn, const Tensor& t);

// R_{ijk}^l with R(x,y)z = A(x)A(y)z - A(y)A(x)z - A([x,y])z.
Tensor curvature_mixed(const LeftInvariantConnection& conn);

// Lowered curvature R_{ijkl} = R_{ijk}^p omega_{pl}.
Tensor curvature_lowered(const LeftInvariantConnection& conn);

// Ricci of the canonical connection of a solvable algebra by the closed
// formula 9 ric(x,y) = tr ad(ad(x)* y) - B(x,y), B the Killing form.
Tensor solvable_ricci_oracle(const SymplecticLieAlgebra& alg);

}  // namespace symcurv
