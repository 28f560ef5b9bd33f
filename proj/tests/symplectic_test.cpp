#include <doctest.h>

#include "symcurv/rng.hpp"
#include "symcurv/symplectic.hpp"

using namespace symcurv;

namespace {

Tensor rand_vec(int d, Rng& rng) {
  Tensor v(d, {Var::up});
  for (int i = 0; i < d; ++i) v.at({i}) = rng.small_rational();
  return v;
}

}  // namespace

TEST_CASE("form construction and inverse relation") {
  SymplecticForm block = SymplecticForm::block_standard(4);
  // om^{ip} om_{pj} = -delta_j^i
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rational s(0);
      for (int p = 0; p < 4; ++p)
        s += block.inverse_bivector().at({i, p}) * block.matrix().at({p, j});
      CHECK(s == (i == j ? Rational(-1) : Rational(0)));
    }

  Tensor zero(4, {Var::down, Var::down});
  CHECK_THROWS_AS(SymplecticForm::from_matrix(zero), std::invalid_argument);

  Tensor nonanti(4, {Var::down, Var::down});
  nonanti.at({0, 1}) = Rational(1);
  CHECK_THROWS_AS(SymplecticForm::from_matrix(nonanti), std::invalid_argument);

  // Random rational antisymmetric nondegenerate in dim 4.
  Rng rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    Tensor m(4, {Var::down, Var::down});
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        Rational v = rng.small_rational();
        m.at({i, j}) = v;
        m.at({j, i}) = -v;
      }
    try {
      SymplecticForm f = SymplecticForm::from_matrix(m);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          Rational s(0);
          for (int p = 0; p < 4; ++p) s += f.inverse_bivector().at({i, p}) * f.matrix().at({p, j});
          CHECK(s == (i == j ? Rational(-1) : Rational(0)));
        }
    } catch (const std::invalid_argument&) {
      // singular draw; the next trial exercises the relation
    }
  }
}

TEST_CASE("plane kinds with the builtin-style form") {
  // omega = e^1^e^4 + e^2^e^3
  Tensor m(4, {Var::down, Var::down});
  m.at({0, 3}) = Rational(1);
  m.at({3, 0}) = Rational(-1);
  m.at({1, 2}) = Rational(1);
  m.at({2, 1}) = Rational(-1);
  SymplecticForm form = SymplecticForm::from_matrix(m);

  CHECK(plane_kind(form, basis_vector(4, 0), basis_vector(4, 2)).kind == PlaneKind::isotropic);
  CHECK(plane_kind(form, basis_vector(4, 0), basis_vector(4, 3)).kind == PlaneKind::symplectic);
  Tensor x = basis_vector(4, 0) + basis_vector(4, 1);
  CHECK(plane_kind(form, x, x * Rational(2)).kind == PlaneKind::dependent);
}

TEST_CASE("plane projection") {
  SymplecticForm form = SymplecticForm::block_standard(6);
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    Tensor x = rand_vec(6, rng), y = rand_vec(6, rng);
    if (form.pair(x, y) == 0) continue;
    CHECK(project_plane(form, x, y, x) == x);
    CHECK(project_plane(form, x, y, y) == y);
    Tensor z = rand_vec(6, rng);
    Tensor pz = project_plane(form, x, y, z);
    CHECK(project_plane(form, x, y, pz) == pz);  // idempotent
    // z - P(z) lies in the symplectic complement of span{x, y}.
    Tensor w = z - pz;
    CHECK(form.pair(w, x) == 0);
    CHECK(form.pair(w, y) == 0);
    // Independence of the spanning pair.
    Tensor x2 = x * Rational(2) + y * Rational(3);
    Tensor y2 = x * Rational(-1) + y * Rational(1);
    if (form.pair(x2, y2) != 0) CHECK(project_plane(form, x2, y2, z) == pz);
  }
  Tensor ex = basis_vector(6, 0), ey = basis_vector(6, 1);
  CHECK(form.pair(ex, ey) == 0);
  CHECK_THROWS_AS(project_plane(form, ex, ey, ex), std::invalid_argument);
}

TEST_CASE("quadratic form classification") {
  Mat id(2, 2);
  id.at(0, 0) = Rational(1);
  id.at(1, 1) = Rational(1);
  CHECK(classify_quadratic(id) == FormClass::definite_positive);

  Mat ind(2, 2);
  ind.at(0, 0) = Rational(1);
  ind.at(1, 1) = Rational(-1);
  CHECK(classify_quadratic(ind) == FormClass::indefinite);

  Mat zero(2, 2);
  CHECK(classify_quadratic(zero) == FormClass::zero);

  Mat degn(2, 2);
  degn.at(0, 0) = Rational(-2, 9);
  CHECK(classify_quadratic(degn) == FormClass::degenerate_negative);

  Mat negd(2, 2);
  negd.at(0, 0) = Rational(-1);
  negd.at(1, 1) = Rational(-3);
  CHECK(classify_quadratic(negd) == FormClass::definite_negative);

  // Invariance under congruence by rational SL(2) matrices.
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Mat q(2, 2);
    q.at(0, 0) = rng.small_rational();
    q.at(1, 1) = rng.small_rational();
    Rational off = rng.small_rational();
    q.at(0, 1) = off;
    q.at(1, 0) = off;
    // Unimodular: [[1, a],[0, 1]] * [[1, 0],[b, 1]]
    Mat m(2, 2);
    Rational a = rng.small_rational(), b = rng.small_rational();
    m.at(0, 0) = Rational(1) + a * b;
    m.at(0, 1) = a;
    m.at(1, 0) = b;
    m.at(1, 1) = Rational(1);
    CHECK(classify_quadratic(m.transposed() * q * m) == classify_quadratic(q));
  }
}

TEST_CASE("symplectic basis of a span") {
  SymplecticForm form = SymplecticForm::block_standard(4);
  std::vector<Tensor> all = {basis_vector(4, 0), basis_vector(4, 1), basis_vector(4, 2),
                             basis_vector(4, 3)};
  auto basis = symplectic_basis_of_span(form, all);
  REQUIRE(basis.size() == 4);
  // Pairing pattern: omega(u_i, x_j) = delta_ij, all other pairings zero.
  const int m = 2;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      CHECK(form.pair(basis[static_cast<std::size_t>(m + i)], basis[static_cast<std::size_t>(j)]) ==
            (i == j ? Rational(1) : Rational(0)));
      CHECK(form.pair(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]) == 0);
      CHECK(form.pair(basis[static_cast<std::size_t>(m + i)], basis[static_cast<std::size_t>(m + j)]) == 0);
    }
  // Members are (signed) standard basis vectors here.
  for (const auto& b : basis) {
    int nonzero = 0;
    for (int i = 0; i < 4; ++i)
      if (b.at({i}) != 0) ++nonzero;
    CHECK(nonzero == 1);
  }

  // A scaled symplectic pair renormalizes to omega(u, x) = 1.
  auto pair2 = symplectic_basis_of_span(
      form, {basis_vector(4, 0) * Rational(3), basis_vector(4, 2) * Rational(3)});
  REQUIRE(pair2.size() == 2);
  CHECK(form.pair(pair2[1], pair2[0]) == Rational(1));

  // Random independent 4-vectors in dim 6 with symplectic span.
  SymplecticForm form6 = SymplecticForm::block_standard(6);
  Rng rng(51);
  int done = 0;
  while (done < 5) {
    std::vector<Tensor> vs;
    for (int i = 0; i < 4; ++i) vs.push_back(rand_vec(6, rng));
    try {
      auto b = symplectic_basis_of_span(form6, vs);
      REQUIRE(b.size() == 4);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          CHECK(form6.pair(b[static_cast<std::size_t>(2 + i)], b[static_cast<std::size_t>(j)]) ==
                (i == j ? Rational(1) : Rational(0)));
          CHECK(form6.pair(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]) == 0);
          CHECK(form6.pair(b[static_cast<std::size_t>(2 + i)], b[static_cast<std::size_t>(2 + j)]) == 0);
        }
      ++done;
    } catch (const std::invalid_argument&) {
      // degenerate draw, try again
    }
  }

  // Degenerate span is rejected.
  CHECK_THROWS_AS(symplectic_basis_of_span(form, {basis_vector(4, 0), basis_vector(4, 1)}),
                  std::invalid_argument);
}

TEST_CASE("isotropic pair completion") {
  SymplecticForm form = SymplecticForm::block_standard(6);
  Rng rng(61);
  int done = 0;
  while (done < 5) {
    Tensor x = rand_vec(6, rng);
    Tensor y = rand_vec(6, rng);
    if (plane_kind(form, x, y).kind != PlaneKind::isotropic) continue;
    auto [u, v] = complete_isotropic_pair(form, x, y);
    CHECK(form.pair(u, x) == Rational(1));
    CHECK(form.pair(u, y) == 0);
    CHECK(form.pair(v, x) == 0);
    CHECK(form.pair(v, y) == Rational(1));
    CHECK(form.pair(u, v) == 0);
    ++done;
  }
}
