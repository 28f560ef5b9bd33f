#include "symcurv/connection.hpp"

#include <algorithm>
#include <stdexcept>

#include "symcurv/rng.hpp"

namespace symcurv {

Tensor LeftInvariantConnection::apply(const Tensor& x, const Tensor& y) const {
  Tensor out(dim(), {Var::up});
  for (int i = 0; i < dim(); ++i) {
    if (x.at({i}) == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y.at({j}) == 0) continue;
      for (int k = 0; k < dim(); ++k) {
        const Rational& v = a.at({i, j, k});
        if (v != 0) out.at({k}) += v * x.at({i}) * y.at({j});
      }
    }
  }
  return out;
}

Mat LeftInvariantConnection::coeff_endo(const Tensor& x) const {
  Mat m(dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    Tensor col = apply(x, basis_vector(dim(), j));
    for (int k = 0; k < dim(); ++k) m.at(k, j) = col.at({k});
  }
  return m;
}

Mat symplectic_adjoint(const SymplecticLieAlgebra& alg, const Tensor& x) {
  const int d = alg.dim();
  Mat out(d, d);
  for (int j = 0; j < d; ++j) {
    // v = ad(x)* e_j: lowered components v_k = -omega(e_j, [x, e_k]).
    Tensor vlow(d, {Var::down});
    for (int k = 0; k < d; ++k)
      vlow.at({k}) = -alg.omega.pair(basis_vector(d, j), alg.bracket(x, basis_vector(d, k)));
    Tensor v = flip_index(vlow, 0, Flip::raise, alg.omega);
    for (int k = 0; k < d; ++k) out.at(k, j) = v.at({k});
  }
  return out;
}

LeftInvariantConnection canonical_connection(const SymplecticLieAlgebra& alg) {
  const int d = alg.dim();
  Tensor a(d, {Var::down, Var::down, Var::up});
  const Rational third(1, 3);
  for (int i = 0; i < d; ++i) {
    Tensor ei = basis_vector(d, i);
    Mat star = symplectic_adjoint(alg, ei);
    for (int j = 0; j < d; ++j) {
      Tensor br = alg.bracket(ei, basis_vector(d, j));
      for (int k = 0; k < d; ++k) a.at({i, j, k}) = third * (br.at({k}) + star.at(k, j));
    }
  }
  LeftInvariantConnection conn{alg, std::move(a)};
  validate_connection(conn);
  return conn;
}

bool is_torsion_free(const SymplecticLieAlgebra& alg, const Tensor& abar) {
  const int d = alg.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (abar.at({i, j, k}) - abar.at({j, i, k}) != alg.c.at({i, j, k})) return false;
  return true;
}

LeftInvariantConnection symmetrize_connection(const SymplecticLieAlgebra& alg,
                                              const Tensor& abar) {
  if (abar.rank() != 3 || abar.dim() != alg.dim())
    throw std::invalid_argument("symmetrize_connection: bad coefficient tensor");
  if (!is_torsion_free(alg, abar))
    throw std::invalid_argument("symmetrize_connection: input has torsion");
  const int d = alg.dim();
  // (nabla-bar omega)_{ijp} = -omega(Abar(e_i)e_j, e_p) - omega(e_j, Abar(e_i)e_p)
  Tensor nabla_omega(d, {Var::down, Var::down, Var::down});
  LeftInvariantConnection bar{alg, abar};
  for (int i = 0; i < d; ++i) {
    Tensor ei = basis_vector(d, i);
    for (int j = 0; j < d; ++j) {
      Tensor aij = bar.apply(ei, basis_vector(d, j));
      for (int p = 0; p < d; ++p) {
        Tensor aip = bar.apply(ei, basis_vector(d, p));
        nabla_omega.at({i, j, p}) =
            -alg.omega.pair(aij, basis_vector(d, p)) - alg.omega.pair(basis_vector(d, j), aip);
      }
    }
  }
  Tensor sym = sym_part(nabla_omega, {0, 1}, Sym::symmetric);
  Tensor diff = flip_index(sym, 2, Flip::raise, alg.omega) * Rational(2, 3);
  LeftInvariantConnection conn{alg, abar + diff};
  validate_connection(conn);
  return conn;
}

LeftInvariantConnection perturbed_connection(const SymplecticLieAlgebra& alg,
                                             const Tensor& pi_sym) {
  if (pi_sym.rank() != 3 || pi_sym.dim() != alg.dim())
    throw std::invalid_argument("perturbed_connection: need a rank-3 tensor");
  if (!(sym_part(pi_sym, {0, 1, 2}, Sym::symmetric) == pi_sym))
    throw std::invalid_argument("perturbed_connection: perturbation must be totally symmetric");
  Tensor s = flip_index(pi_sym, 2, Flip::raise, alg.omega);
  LeftInvariantConnection base = canonical_connection(alg);
  LeftInvariantConnection conn{alg, base.a + s};
  validate_connection(conn);
  return conn;
}

LeftInvariantConnection random_symplectic_connection(const SymplecticLieAlgebra& alg,
                                                     std::uint64_t seed) {
  const int d = alg.dim();
  Rng rng(Rng::mix(seed, 0x53594d50ull));
  Tensor pi(d, {Var::down, Var::down, Var::down});
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      for (int k = j; k < d; ++k) {
        Rational v = rng.small_rational();
        int idx[3] = {i, j, k};
        std::sort(idx, idx + 3);
        do {
          pi.at({idx[0], idx[1], idx[2]}) = v;
        } while (std::next_permutation(idx, idx + 3));
      }
  return perturbed_connection(alg, pi);
}

void validate_connection(const LeftInvariantConnection& conn) {
  const int d = conn.dim();
  if (!is_torsion_free(conn.alg, conn.a))
    throw std::runtime_error("connection: torsion-free condition fails");
  for (int i = 0; i < d; ++i) {
    Tensor ei = basis_vector(d, i);
    for (int j = 0; j < d; ++j) {
      Tensor aij = conn.apply(ei, basis_vector(d, j));
      for (int k = 0; k < d; ++k) {
        Tensor aik = conn.apply(ei, basis_vector(d, k));
        Rational s = conn.alg.omega.pair(aij, basis_vector(d, k)) +
                     conn.alg.omega.pair(basis_vector(d, j), aik);
        if (s != 0) throw std::runtime_error("connection: not symplectic");
      }
    }
  }
}

Tensor covariant_derivative(const LeftInvariantConnection& conn, const Tensor& t) {
  const int d = conn.dim();
  if (t.dim() != d) throw std::invalid_argument("covariant_derivative: dim mismatch");
  std::vector<Var> var;
  var.push_back(Var::down);
  var.insert(var.end(), t.variance().begin(), t.variance().end());
  Tensor out(d, var);
  const int r = t.rank();
  std::vector<int> src(static_cast<std::size_t>(r), 0);
  for_each_index(d, r + 1, [&](std::span<const int> idx) {
    const int i = idx[0];
    Rational sum(0);
    for (int s = 0; s < r; ++s) {
      for (std::size_t q = 0; q < src.size(); ++q) src[q] = idx[q + 1];
      const int js = idx[static_cast<std::size_t>(s) + 1];
      for (int p = 0; p < d; ++p) {
        src[static_cast<std::size_t>(s)] = p;
        const Rational& tv = t.at(src);
        if (tv == 0) continue;
        if (t.var(s) == Var::up)
          sum += conn.a.at({i, p, js}) * tv;  // +A_{ip}^{j_s} T[..p..]
        else
          sum -= conn.a.at({i, js, p}) * tv;  // -A_{i j_s}^p T[..p..]
      }
    }
    out.at(idx) = sum;
  });
  return out;
}

Tensor curvature_mixed(const LeftInvariantConnection& conn) {
  const int d = conn.dim();
  Tensor r(d, {Var::down, Var::down, Var::down, Var::up});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Rational sum(0);
          for (int p = 0; p < d; ++p) {
            sum += conn.a.at({j, k, p}) * conn.a.at({i, p, l});
            sum -= conn.a.at({i, k, p}) * conn.a.at({j, p, l});
            sum -= conn.alg.c.at({i, j, p}) * conn.a.at({p, k, l});
          }
          r.at({i, j, k, l}) = sum;
        }
  return r;
}

Tensor curvature_lowered(const LeftInvariantConnection& conn) {
  return flip_index(curvature_mixed(conn), 3, Flip::lower, conn.alg.omega);
}

Tensor solvable_ricci_oracle(const SymplecticLieAlgebra& alg) {
  if (!is_solvable(alg)) throw std::invalid_argument("solvable_ricci_oracle: algebra not solvable");
  const int d = alg.dim();
  Tensor ric(d, {Var::down, Var::down});
  const Rational ninth(1, 9);
  for (int i = 0; i < d; ++i) {
    Mat star = symplectic_adjoint(alg, basis_vector(d, i));
    for (int j = 0; j < d; ++j) {
      Tensor stj(d, {Var::up});
      for (int k = 0; k < d; ++k) stj.at({k}) = star.at(k, j);
      ric.at({i, j}) =
          ninth * (alg.trace_ad(stj) - alg.killing(basis_vector(d, i), basis_vector(d, j)));
    }
  }
  return ric;
}

}  // namespace symcurv
