#include <doctest.h>

#include "symcurv/curvature.hpp"
#include "symcurv/rng.hpp"

using namespace symcurv;

namespace {

std::vector<SymplecticLieAlgebra> sample_algebras() {
  return {builtin_algebra("aff1c"), builtin_algebra("r40"), heisenberg4_algebra(),
          abelian_algebra(4), aff1r_algebra(),
          direct_sum(builtin_algebra("r40"), abelian_algebra(2))};
}

Mat shear(int d, Rng& rng) {
  Mat p = Mat::identity(d);
  for (int step = 0; step < d; ++step) {
    int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
    if (i == j) continue;
    Rational c = rng.small_rational();
    for (int k = 0; k < d; ++k) p.at(i, k) += c * p.at(j, k);
  }
  return p;
}

}  // namespace

TEST_CASE("builtin algebras validate") {
  for (const char* name : {"aff1c", "r40"}) {
    SymplecticLieAlgebra alg = builtin_algebra(name);
    ValidationReport rep = validate(alg);
    CHECK(rep.ok());
    CHECK(rep.solvable);
    CHECK(!rep.nilpotent);
  }
  CHECK(validate(builtin_algebra("aff1c")).exact);
  CHECK(!validate(builtin_algebra("r40")).exact);
  CHECK_THROWS_AS(builtin_algebra("x"), std::invalid_argument);
}

TEST_CASE("broken Jacobi is reported with a witness triple") {
  // [e1,e2] = e2, [e1,e3] = e3, [e2,e3] = e1 fails Jacobi on (e1,e2,e3).
  Tensor c(4, {Var::down, Var::down, Var::up});
  auto set = [&](int i, int j, int k) {
    c.at({i, j, k}) = Rational(1);
    c.at({j, i, k}) = Rational(-1);
  };
  set(0, 1, 1);
  set(0, 2, 2);
  set(1, 2, 0);
  SymplecticLieAlgebra alg{std::move(c), SymplecticForm::block_standard(4)};
  ValidationReport rep = validate(alg);
  CHECK(!rep.jacobi);
  REQUIRE(!rep.errors.empty());
  CHECK(rep.errors.front().find("(e1, e2, e3)") != std::string::npos);
}

TEST_CASE("heisenberg-type algebra is nilpotent with closed form") {
  SymplecticLieAlgebra alg = heisenberg4_algebra();
  ValidationReport rep = validate(alg);
  CHECK(rep.ok());
  CHECK(rep.nilpotent);
  CHECK(rep.solvable);
  // Falsifiable claim: nilpotent algebras have Ricci-flat canonical connection.
  LeftInvariantConnection conn = canonical_connection(alg);
  CHECK(ricci_from_mixed(curvature_mixed(conn)).is_zero());
}

TEST_CASE("symplectic adjoint satisfies its defining relation") {
  Rng rng(71);
  for (const auto& base : sample_algebras()) {
    SymplecticLieAlgebra alg = transform_basis(base, shear(base.dim(), rng));
    REQUIRE(validate(alg).ok());
    const int d = alg.dim();
    for (int i = 0; i < d; ++i) {
      Mat star = symplectic_adjoint(alg, basis_vector(d, i));
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Rational lhs = alg.omega.pair(apply_endo(star, basis_vector(d, j)), basis_vector(d, k));
          Rational rhs =
              -alg.omega.pair(basis_vector(d, j), alg.bracket(basis_vector(d, i), basis_vector(d, k)));
          CHECK(lhs == rhs);
        }
    }
  }
  // Abelian algebra: the adjoint and its symplectic adjoint vanish.
  SymplecticLieAlgebra ab = abelian_algebra(4);
  CHECK(symplectic_adjoint(ab, basis_vector(4, 1)).is_zero());
}

TEST_CASE("canonical connection is torsion-free and symplectic") {
  for (const auto& alg : sample_algebras()) {
    LeftInvariantConnection conn = canonical_connection(alg);  // validates internally
    CHECK(is_torsion_free(alg, conn.a));
  }
  CHECK(canonical_connection(abelian_algebra(4)).a.is_zero());
}

TEST_CASE("symmetrizing the half-bracket connection gives the canonical one") {
  Rng rng(81);
  std::vector<SymplecticLieAlgebra> algs = sample_algebras();
  for (int t = 0; t < 4; ++t)
    algs.push_back(transform_basis(algs[static_cast<std::size_t>(t) % algs.size()],
                                   shear(algs[static_cast<std::size_t>(t) % algs.size()].dim(), rng)));
  for (const auto& alg : algs) {
    const int d = alg.dim();
    Tensor abar(d, {Var::down, Var::down, Var::up});
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) abar.at({i, j, k}) = alg.c.at({i, j, k}) * Rational(1, 2);
    LeftInvariantConnection sym = symmetrize_connection(alg, abar);
    CHECK(sym.a == canonical_connection(alg).a);
  }
}

TEST_CASE("symmetrization fixes symplectic inputs and rejects torsion") {
  SymplecticLieAlgebra alg = builtin_algebra("r40");
  LeftInvariantConnection canon = canonical_connection(alg);
  CHECK(symmetrize_connection(alg, canon.a).a == canon.a);

  // A torsion-free non-symplectic input: half-bracket plus a symmetric
  // (but not omega-compatible) term.
  Tensor abar(4, {Var::down, Var::down, Var::up});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) abar.at({i, j, k}) = alg.c.at({i, j, k}) * Rational(1, 2);
  abar.at({0, 0, 0}) += Rational(1);
  LeftInvariantConnection out = symmetrize_connection(alg, abar);  // must validate
  CHECK(is_torsion_free(alg, out.a));

  Tensor torsionful = abar;
  torsionful.at({0, 1, 0}) += Rational(1);
  CHECK_THROWS_AS(symmetrize_connection(alg, torsionful), std::invalid_argument);
}

TEST_CASE("perturbed connections") {
  SymplecticLieAlgebra alg = builtin_algebra("aff1c");
  Tensor zero(4, {Var::down, Var::down, Var::down});
  CHECK(perturbed_connection(alg, zero).a == canonical_connection(alg).a);

  // The lowered difference from the canonical connection is the
  // perturbation itself, totally symmetric.
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    LeftInvariantConnection conn = random_symplectic_connection(alg, seed);
    Tensor diff = conn.a - canonical_connection(alg).a;
    Tensor lowered = flip_index(diff, 2, Flip::lower, alg.omega);
    CHECK(sym_part(lowered, {0, 1, 2}, Sym::symmetric) == lowered);
  }

  // Seeds on several dims, all outputs pass validation (done inside the
  // constructor; exercised here over the sample family).
  for (const auto& alg2 : sample_algebras())
    for (std::uint64_t seed = 1; seed <= 50; ++seed) random_symplectic_connection(alg2, seed);
}

TEST_CASE("covariant derivative basics") {
  SymplecticLieAlgebra alg = builtin_algebra("r40");
  LeftInvariantConnection conn = random_symplectic_connection(alg, 9);
  CHECK(covariant_derivative(conn, alg.omega.matrix()).is_zero());

  // Leibniz rule on a product of random tensors.
  Rng rng(91);
  Tensor s(4, {Var::down, Var::up});
  Tensor t(4, {Var::down});
  for (auto& v : s.components()) v = rng.small_rational();
  for (auto& v : t.components()) v = rng.small_rational();
  Tensor lhs = covariant_derivative(conn, tensor_product(s, t));
  // nabla(s (x) t) = nabla s (x) t + (s (x) nabla t with the derivative
  // slot moved to the front).
  Tensor rhs = tensor_product(covariant_derivative(conn, s), t) +
               permute_slots(tensor_product(s, covariant_derivative(conn, t)), {2, 0, 1, 3});
  CHECK(lhs == rhs);

  // Commutes with contraction.
  Tensor ct = contract(tensor_product(s, t), 1, 2);  // rank 1
  Tensor lhs2 = covariant_derivative(conn, ct);
  Tensor rhs2 = contract(covariant_derivative(conn, tensor_product(s, t)), 2, 3);
  CHECK(lhs2 == rhs2);
}

TEST_CASE("special elements") {
  SymplecticLieAlgebra aff = builtin_algebra("aff1c");
  SpecialElements se = special_elements(aff);
  CHECK(se.ell == basis_vector(4, 3) * Rational(-2));
  CHECK(!se.unimodular);
  CHECK(!se.nilpotent);

  SymplecticLieAlgebra r = builtin_algebra("r40");
  CHECK(special_elements(r).ell == basis_vector(4, 0));

  SpecialElements ab = special_elements(abelian_algebra(4));
  CHECK(ab.ell.is_zero());
  CHECK(ab.unimodular);
  CHECK(ab.nilpotent);

  // omega([ell,x],y) + omega(x,[ell,y]) = 0 over basis pairs.
  for (const auto& alg : sample_algebras()) {
    SpecialElements s = special_elements(alg);
    for (int i = 0; i < alg.dim(); ++i)
      for (int j = 0; j < alg.dim(); ++j) {
        Rational v = alg.omega.pair(alg.bracket(s.ell, basis_vector(alg.dim(), i)),
                                    basis_vector(alg.dim(), j)) +
                     alg.omega.pair(basis_vector(alg.dim(), i),
                                    alg.bracket(s.ell, basis_vector(alg.dim(), j)));
        CHECK(v == 0);
      }
  }
}

TEST_CASE("curvature of flat and builtin connections") {
  CHECK(curvature_mixed(canonical_connection(abelian_algebra(4))).is_zero());
  CHECK(curvature_mixed(canonical_connection(abelian_algebra(6))).is_zero());

  // aff(1,C): R(x,y) = -(1/3) sad([x,y]) since [sad,sad] = (2/3) sad([.,.]).
  SymplecticLieAlgebra aff = builtin_algebra("aff1c");
  LeftInvariantConnection conn = canonical_connection(aff);
  Tensor rm = curvature_mixed(conn);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Tensor br = aff.bracket(basis_vector(4, i), basis_vector(4, j));
      Mat sad_br = conn.coeff_endo(br);
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          CHECK(rm.at({i, j, k, l}) == Rational(-1, 3) * sad_br.at(l, k));
    }
}

TEST_CASE("solvable Ricci oracle") {
  CHECK(solvable_ricci_oracle(abelian_algebra(4)).is_zero());

  SymplecticLieAlgebra aff = builtin_algebra("aff1c");
  CHECK(solvable_ricci_oracle(aff) ==
        ricci_from_mixed(curvature_mixed(canonical_connection(aff))));

  // A non-solvable algebra is refused (sl2 + center; the oracle checks
  // solvability before anything else).
  Tensor c(4, {Var::down, Var::down, Var::up});
  auto set = [&](int i, int j, int k, long long v) {
    c.at({i, j, k}) = Rational(v);
    c.at({j, i, k}) = Rational(-v);
  };
  set(0, 1, 2, 1);
  set(2, 0, 0, 2);
  set(2, 1, 1, -2);
  SymplecticLieAlgebra sl2{std::move(c), SymplecticForm::block_standard(4)};
  CHECK(!is_solvable(sl2));
  CHECK_THROWS_AS(solvable_ricci_oracle(sl2), std::invalid_argument);
}

TEST_CASE("curvature matches the double-derivative assembly on random vectors") {
  Rng rng(101);
  for (const auto& alg : sample_algebras()) {
    LeftInvariantConnection conn = random_symplectic_connection(alg, 123);
    Tensor rm = curvature_mixed(conn);
    const int d = alg.dim();
    for (int trial = 0; trial < 3; ++trial) {
      Tensor x(d, {Var::up});
      for (int i = 0; i < d; ++i) x.at({i}) = rng.small_rational();
      Tensor ddx = covariant_derivative(conn, covariant_derivative(conn, x));
      Tensor anti = sym_part(ddx, {0, 1}, Sym::antisymmetric) * Rational(2);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          for (int l = 0; l < d; ++l) {
            Rational expect(0);
            for (int p = 0; p < d; ++p) expect += rm.at({i, j, p, l}) * x.at({p});
            CHECK(anti.at({i, j, l}) == expect);
          }
    }
  }
}
