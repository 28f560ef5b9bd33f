#include <doctest.h>

#include "symcurv/rng.hpp"
#include "symcurv/symplectic.hpp"
#include "symcurv/tensor.hpp"

using namespace symcurv;

namespace {

Tensor random_tensor(int dim, std::vector<Var> var, Rng& rng) {
  Tensor t(dim, std::move(var));
  for (auto& c : t.components()) c = rng.small_rational();
  return t;
}

}  // namespace

TEST_CASE("symmetrization of a simple product") {
  // e^1 x e^2 on dim 2 -> (1/2)(e^1 x e^2 + e^2 x e^1)
  Tensor t = tensor_product(basis_covector(2, 0), basis_covector(2, 1));
  Tensor s = sym_part(t, {0, 1}, Sym::symmetric);
  CHECK(s.at({0, 1}) == Rational(1, 2));
  CHECK(s.at({1, 0}) == Rational(1, 2));
  CHECK(s.at({0, 0}) == 0);
  CHECK(sym_part(s, {0, 1}, Sym::antisymmetric).is_zero());
}

TEST_CASE("symmetrization is idempotent (brute-force oracle)") {
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    Tensor t = random_tensor(4, {Var::down, Var::down, Var::down}, rng);
    for (Sym mode : {Sym::symmetric, Sym::antisymmetric}) {
      Tensor s = sym_part(t, {0, 1, 2}, mode);
      // Oracle: explicit average over the six permutations.
      Tensor expect(4, {Var::down, Var::down, Var::down});
      const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      const int signs[6] = {1, -1, -1, 1, 1, -1};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          for (int k = 0; k < 4; ++k) {
            Rational acc(0);
            int idx[3] = {i, j, k};
            for (int p = 0; p < 6; ++p) {
              Rational v = t.at({idx[perms[p][0]], idx[perms[p][1]], idx[perms[p][2]]});
              acc += (mode == Sym::antisymmetric && signs[p] < 0) ? -v : v;
            }
            expect.at({i, j, k}) = acc * Rational(1, 6);
          }
      CHECK(s == expect);
      CHECK(sym_part(s, {0, 1, 2}, mode) == s);
    }
  }
}

TEST_CASE("sym + antisym is the identity on rank 2") {
  Rng rng(5);
  Tensor t = random_tensor(4, {Var::down, Var::down}, rng);
  CHECK(sym_part(t, {0, 1}, Sym::symmetric) + sym_part(t, {0, 1}, Sym::antisymmetric) == t);
}

TEST_CASE("contractions") {
  const int d = 6;
  Tensor delta(d, {Var::down, Var::up});
  for (int i = 0; i < d; ++i) delta.at({i, i}) = Rational(1);
  Tensor tr = contract(delta, 1, 0);
  CHECK(tr.rank() == 0);
  CHECK(tr.at(std::initializer_list<int>{}) == Rational(d));

  // contract(X x alpha) = alpha(X)
  Rng rng(7);
  Tensor x = random_tensor(d, {Var::up}, rng);
  Tensor alpha = random_tensor(d, {Var::down}, rng);
  Rational expect(0);
  for (int i = 0; i < d; ++i) expect += x.at({i}) * alpha.at({i});
  CHECK(contract(tensor_product(x, alpha), 0, 1).at(std::initializer_list<int>{}) == expect);
}

TEST_CASE("product then contraction is composition of linear maps") {
  Rng rng(13);
  for (int d : {2, 4, 6}) {
    Tensor a = random_tensor(d, {Var::down, Var::up}, rng);  // A_i^j
    Tensor b = random_tensor(d, {Var::down, Var::up}, rng);
    // (B after A)_i^k = A_i^p B_p^k: contract slot 1 (up) with slot 2 (down).
    Tensor comp = contract(tensor_product(a, b), 1, 2);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        Rational expect(0);
        for (int p = 0; p < d; ++p) expect += a.at({i, p}) * b.at({p, k});
        CHECK(comp.at({i, k}) == expect);
      }
  }
}

TEST_CASE("index flips") {
  SymplecticForm form = SymplecticForm::block_standard(4);
  Rng rng(3);
  Tensor x = random_tensor(4, {Var::up}, rng);
  Tensor y = random_tensor(4, {Var::up}, rng);

  CHECK(flip_index(flip_index(x, 0, Flip::lower, form), 0, Flip::raise, form) == x);

  // X_p Y^p = -X^p Y_p
  Tensor xl = flip_index(x, 0, Flip::lower, form);
  Tensor yl = flip_index(y, 0, Flip::lower, form);
  Rational a = contract(tensor_product(xl, y), 1, 0).at(std::initializer_list<int>{});
  Rational b = contract(tensor_product(x, yl), 0, 1).at(std::initializer_list<int>{});
  CHECK(a == -b);

  // Lowering both slots of om^{ij} returns om_{ij}.
  Tensor lowered =
      flip_index(flip_index(form.inverse_bivector(), 0, Flip::lower, form), 1, Flip::lower, form);
  CHECK(lowered == form.matrix());

  // Multi-slot involution on a rank-3 tensor.
  Tensor t = random_tensor(4, {Var::down, Var::up, Var::down}, rng);
  for (int slot = 0; slot < 3; ++slot) {
    Flip there = t.var(slot) == Var::up ? Flip::lower : Flip::raise;
    Flip back = t.var(slot) == Var::up ? Flip::raise : Flip::lower;
    CHECK(flip_index(flip_index(t, slot, there, form), slot, back, form) == t);
  }
}

TEST_CASE("error paths") {
  Tensor t(4, {Var::down, Var::up});
  CHECK_THROWS_AS(sym_part(t, {0, 1}, Sym::symmetric), std::invalid_argument);  // mixed variance
  CHECK_THROWS_AS(sym_part(t, {0, 5}, Sym::symmetric), std::invalid_argument);
  CHECK_THROWS_AS(contract(t, 0, 1), std::invalid_argument);  // slot 0 is down
  CHECK_THROWS_AS(Tensor(3, {Var::up}), std::invalid_argument);
  CHECK_THROWS_AS(t.at({0, 4}), std::out_of_range);
}
