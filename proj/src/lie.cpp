#include "symcurv/lie.hpp"

#include <stdexcept>

namespace symcurv {

Tensor SymplecticLieAlgebra::bracket(const Tensor& x, const Tensor& y) const {
  Tensor out(dim(), {Var::up});
  for (int i = 0; i < dim(); ++i) {
    if (x.at({i}) == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y.at({j}) == 0) continue;
      for (int k = 0; k < dim(); ++k) {
        const Rational& cv = c.at({i, j, k});
        if (cv != 0) out.at({k}) += cv * x.at({i}) * y.at({j});
      }
    }
  }
  return out;
}

Mat SymplecticLieAlgebra::ad(const Tensor& x) const {
  Mat m(dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    Tensor col = bracket(x, basis_vector(dim(), j));
    for (int k = 0; k < dim(); ++k) m.at(k, j) = col.at({k});
  }
  return m;
}

Rational SymplecticLieAlgebra::trace_ad(const Tensor& x) const {
  Rational t(0);
  Mat m = ad(x);
  for (int i = 0; i < dim(); ++i) t += m.at(i, i);
  return t;
}

Rational SymplecticLieAlgebra::killing(const Tensor& x, const Tensor& y) const {
  Mat prod = ad(x) * ad(y);
  Rational t(0);
  for (int i = 0; i < dim(); ++i) t += prod.at(i, i);
  return t;
}

namespace {

std::string triple_str(int i, int j, int k) {
  return "(e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ", e" +
         std::to_string(k + 1) + ")";
}

// Span of [a-basis, b-basis] products, as coordinate rows.
std::vector<std::vector<Rational>> bracket_span(const SymplecticLieAlgebra& alg,
                                                const std::vector<std::vector<Rational>>& a,
                                                const std::vector<std::vector<Rational>>& b) {
  std::vector<std::vector<Rational>> prods;
  for (const auto& u : a)
    for (const auto& v : b) {
      Tensor w = alg.bracket(vector_tensor(alg.dim(), u), vector_tensor(alg.dim(), v));
      std::vector<Rational> row(static_cast<std::size_t>(alg.dim()));
      for (int i = 0; i < alg.dim(); ++i) row[static_cast<std::size_t>(i)] = w.at({i});
      prods.push_back(std::move(row));
    }
  return span_basis(prods);
}

std::vector<std::vector<Rational>> full_basis(int dim) {
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < dim; ++i) {
    std::vector<Rational> r(static_cast<std::size_t>(dim), Rational(0));
    r[static_cast<std::size_t>(i)] = Rational(1);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

bool is_nilpotent(const SymplecticLieAlgebra& alg) {
  auto g = full_basis(alg.dim());
  auto cur = g;
  for (int step = 0; step <= alg.dim(); ++step) {
    cur = bracket_span(alg, g, cur);  // lower central series
    if (cur.empty()) return true;
  }
  return false;
}

bool is_solvable(const SymplecticLieAlgebra& alg) {
  auto cur = full_basis(alg.dim());
  for (int step = 0; step <= alg.dim(); ++step) {
    cur = bracket_span(alg, cur, cur);  // derived series
    if (cur.empty()) return true;
  }
  return false;
}

ValidationReport validate(const SymplecticLieAlgebra& alg) {
  ValidationReport rep;
  const int d = alg.dim();

  rep.antisymmetric = true;
  for (int i = 0; i < d && rep.antisymmetric; ++i)
    for (int j = 0; j < d && rep.antisymmetric; ++j)
      for (int k = 0; k < d; ++k)
        if (alg.c.at({i, j, k}) != -alg.c.at({j, i, k})) {
          rep.antisymmetric = false;
          rep.errors.push_back("bracket not antisymmetric at " + triple_str(i, j, k));
          break;
        }

  rep.jacobi = true;
  for (int i = 0; i < d && rep.jacobi; ++i)
    for (int j = i + 1; j < d && rep.jacobi; ++j)
      for (int k = j + 1; k < d; ++k) {
        Tensor ei = basis_vector(d, i), ej = basis_vector(d, j), ek = basis_vector(d, k);
        Tensor s = alg.bracket(alg.bracket(ei, ej), ek);
        s += alg.bracket(alg.bracket(ej, ek), ei);
        s += alg.bracket(alg.bracket(ek, ei), ej);
        if (!s.is_zero()) {
          rep.jacobi = false;
          rep.errors.push_back("Jacobi identity fails at " + triple_str(i, j, k));
          break;
        }
      }

  rep.cocycle = true;
  for (int i = 0; i < d && rep.cocycle; ++i)
    for (int j = i + 1; j < d && rep.cocycle; ++j)
      for (int k = j + 1; k < d; ++k) {
        Tensor ei = basis_vector(d, i), ej = basis_vector(d, j), ek = basis_vector(d, k);
        Rational s = alg.omega.pair(alg.bracket(ei, ej), ek) +
                     alg.omega.pair(alg.bracket(ej, ek), ei) +
                     alg.omega.pair(alg.bracket(ek, ei), ej);
        if (s != 0) {
          rep.cocycle = false;
          rep.errors.push_back("omega is not closed at " + triple_str(i, j, k));
          break;
        }
      }

  rep.nondegenerate = true;  // enforced by SymplecticForm construction

  // Exact iff omega_{ij} = -alpha([e_i, e_j]) = -c_{ij}^p alpha_p is solvable.
  {
    std::vector<std::pair<int, int>> eqs;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) eqs.emplace_back(i, j);
    Mat m(static_cast<int>(eqs.size()), d);
    std::vector<Rational> rhs(eqs.size());
    for (std::size_t r = 0; r < eqs.size(); ++r) {
      auto [i, j] = eqs[r];
      for (int p = 0; p < d; ++p) m.at(static_cast<int>(r), p) = -alg.c.at({i, j, p});
      rhs[r] = alg.omega.matrix().at({i, j});
    }
    auto sol = solve(m, rhs);
    rep.exact = sol.has_value();
    if (sol) rep.exact_alpha = covector_tensor(d, *sol);
  }

  rep.nilpotent = is_nilpotent(alg);
  rep.solvable = is_solvable(alg);
  return rep;
}

SpecialElements special_elements(const SymplecticLieAlgebra& alg) {
  const int d = alg.dim();
  // ell^i omega_{ij} = tr ad(e_j)
  Mat m(d, d);
  std::vector<Rational> rhs(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m.at(j, i) = alg.omega.matrix().at({i, j});
    rhs[static_cast<std::size_t>(j)] = alg.trace_ad(basis_vector(d, j));
  }
  auto sol = solve(m, rhs);
  if (!sol) throw std::runtime_error("special_elements: defining system has no solution");
  SpecialElements out{vector_tensor(d, *sol), false, false};
  out.unimodular = out.ell.is_zero();
  out.nilpotent = is_nilpotent(alg);
  // ell is self-adjoint: omega([ell,x],y) + omega(x,[ell,y]) = 0.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Tensor ei = basis_vector(d, i), ej = basis_vector(d, j);
      Rational s = alg.omega.pair(alg.bracket(out.ell, ei), ej) +
                   alg.omega.pair(ei, alg.bracket(out.ell, ej));
      if (s != 0) throw std::runtime_error("special_elements: ell is not self-adjoint");
    }
  return out;
}

namespace {

SymplecticForm builtin_omega() {
  // e^1^e^4 + e^2^e^3
  Tensor m(4, {Var::down, Var::down});
  m.at({0, 3}) = Rational(1);
  m.at({3, 0}) = Rational(-1);
  m.at({1, 2}) = Rational(1);
  m.at({2, 1}) = Rational(-1);
  return SymplecticForm::from_matrix(m);
}

void set_bracket(Tensor& c, int i, int j, int k, const Rational& v) {
  c.at({i, j, k}) = v;
  c.at({j, i, k}) = -v;
}

}  // namespace

SymplecticLieAlgebra builtin_algebra(const std::string& name) {
  if (name == "aff1c") {
    // [x,y] = (x1 y3 - x3 y1 - x2 y4 + x4 y2) e3 + (x1 y4 - x4 y1 + x2 y3 - x3 y2) e4
    Tensor c(4, {Var::down, Var::down, Var::up});
    set_bracket(c, 0, 2, 2, Rational(1));
    set_bracket(c, 1, 3, 2, Rational(-1));
    set_bracket(c, 0, 3, 3, Rational(1));
    set_bracket(c, 1, 2, 3, Rational(1));
    return {std::move(c), builtin_omega()};
  }
  if (name == "r40") {
    // [x,y] = (x4 y1 - x1 y4) e1 + (x4 y3 - x3 y4) e2
    Tensor c(4, {Var::down, Var::down, Var::up});
    set_bracket(c, 3, 0, 0, Rational(1));
    set_bracket(c, 3, 2, 1, Rational(1));
    return {std::move(c), builtin_omega()};
  }
  throw std::invalid_argument("unknown builtin algebra: '" + name + "'");
}

SymplecticLieAlgebra abelian_algebra(int dim) {
  Tensor c(dim, {Var::down, Var::down, Var::up});
  return {std::move(c), SymplecticForm::block_standard(dim)};
}

SymplecticLieAlgebra aff1r_algebra() {
  Tensor c(2, {Var::down, Var::down, Var::up});
  set_bracket(c, 0, 1, 1, Rational(1));
  return {std::move(c), SymplecticForm::block_standard(2)};
}

SymplecticLieAlgebra heisenberg4_algebra() {
  // [e1, e2] = e3, with omega = e^1^e^3 + e^2^e^4 (closed: e3 pairs only e1).
  Tensor c(4, {Var::down, Var::down, Var::up});
  set_bracket(c, 0, 1, 2, Rational(1));
  Tensor m(4, {Var::down, Var::down});
  m.at({0, 2}) = Rational(1);
  m.at({2, 0}) = Rational(-1);
  m.at({1, 3}) = Rational(1);
  m.at({3, 1}) = Rational(-1);
  return {std::move(c), SymplecticForm::from_matrix(m)};
}

SymplecticLieAlgebra direct_sum(const SymplecticLieAlgebra& a, const SymplecticLieAlgebra& b) {
  const int da = a.dim(), db = b.dim(), d = da + db;
  Tensor c(d, {Var::down, Var::down, Var::up});
  for_each_index(da, 3, [&](std::span<const int> idx) {
    const Rational& v = a.c.at(idx);
    if (v != 0) c.at({idx[0], idx[1], idx[2]}) = v;
  });
  for_each_index(db, 3, [&](std::span<const int> idx) {
    const Rational& v = b.c.at(idx);
    if (v != 0) c.at({da + idx[0], da + idx[1], da + idx[2]}) = v;
  });
  Tensor m(d, {Var::down, Var::down});
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) m.at({i, j}) = a.omega.matrix().at({i, j});
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j) m.at({da + i, da + j}) = b.omega.matrix().at({i, j});
  return {std::move(c), SymplecticForm::from_matrix(m)};
}

SymplecticLieAlgebra transform_basis(const SymplecticLieAlgebra& alg, const Mat& p) {
  const int d = alg.dim();
  if (p.rows() != d || p.cols() != d) throw std::invalid_argument("transform_basis: bad matrix");
  auto pinv = inverse(p);
  if (!pinv) throw std::invalid_argument("transform_basis: singular matrix");
  // f_i = P_i^j e_j:   c'_{ij}^k = P_i^a P_j^b c_{ab}^p (P^{-1})_p^k,
  //                    omega'_{ij} = P_i^a P_j^b omega_{ab}.
  Tensor c2(d, {Var::down, Var::down, Var::up});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Tensor fi(d, {Var::up}), fj(d, {Var::up});
      for (int a = 0; a < d; ++a) {
        fi.at({a}) = p.at(i, a);
        fj.at({a}) = p.at(j, a);
      }
      Tensor br = alg.bracket(fi, fj);
      for (int k = 0; k < d; ++k) {
        Rational s(0);
        for (int q = 0; q < d; ++q) s += br.at({q}) * pinv->at(q, k);
        c2.at({i, j, k}) = s;
      }
    }
  Tensor m2(d, {Var::down, Var::down});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational s(0);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) s += p.at(i, a) * p.at(j, b) * alg.omega.matrix().at({a, b});
      m2.at({i, j}) = s;
    }
  return {std::move(c2), SymplecticForm::from_matrix(m2)};
}

Tensor endo_to_tensor(const Mat& m) {
  Tensor t(m.rows(), {Var::down, Var::up});
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t.at({i, j}) = m.at(j, i);
  return t;
}

Mat tensor_to_endo(const Tensor& t) {
  Mat m(t.dim(), t.dim());
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) m.at(j, i) = t.at({i, j});
  return m;
}

Tensor apply_endo(const Mat& m, const Tensor& x) {
  Tensor out(x.dim(), {Var::up});
  for (int i = 0; i < x.dim(); ++i) {
    Rational s(0);
    for (int j = 0; j < x.dim(); ++j) s += m.at(i, j) * x.at({j});
    out.at({i}) = s;
  }
  return out;
}

}  // namespace symcurv
