#include "symcurv/symplectic.hpp"

#include <stdexcept>

namespace symcurv {

namespace {

Mat tensor_to_mat(const Tensor& t) {
  Mat m(t.dim(), t.dim());
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) m.at(i, j) = t.at({i, j});
  return m;
}

std::vector<Rational> tensor_to_vec(const Tensor& t) {
  std::vector<Rational> v(static_cast<std::size_t>(t.dim()));
  for (int i = 0; i < t.dim(); ++i) v[static_cast<std::size_t>(i)] = t.at({i});
  return v;
}

}  // namespace

SymplecticForm SymplecticForm::from_matrix(const Tensor& matrix) {
  if (matrix.rank() != 2 || matrix.var(0) != Var::down || matrix.var(1) != Var::down)
    throw std::invalid_argument("symplectic form: need a rank-2 (down,down) tensor");
  const int d = matrix.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (matrix.at({i, j}) != -matrix.at({j, i}))
        throw std::invalid_argument("symplectic form: matrix is not antisymmetric");
  auto minv = inverse(tensor_to_mat(matrix));
  if (!minv) throw std::invalid_argument("symplectic form: matrix is singular");
  // om^{ip} om_{pj} = -delta_j^i, so the bivector is minus the matrix inverse.
  Tensor inv(d, {Var::up, Var::up});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) inv.at({i, j}) = -minv->at(i, j);
  return SymplecticForm(matrix, std::move(inv));
}

SymplecticForm SymplecticForm::block_standard(int dim) {
  if (dim <= 0 || dim % 2 != 0) throw std::invalid_argument("symplectic form: dim must be even");
  Tensor m(dim, {Var::down, Var::down});
  const int n = dim / 2;
  for (int i = 0; i < n; ++i) {
    m.at({i, n + i}) = Rational(1);
    m.at({n + i, i}) = Rational(-1);
  }
  return from_matrix(m);
}

SymplecticForm SymplecticForm::pairwise_standard(int dim) {
  if (dim <= 0 || dim % 2 != 0) throw std::invalid_argument("symplectic form: dim must be even");
  Tensor m(dim, {Var::down, Var::down});
  for (int i = 0; i + 1 < dim; i += 2) {
    m.at({i, i + 1}) = Rational(1);
    m.at({i + 1, i}) = Rational(-1);
  }
  return from_matrix(m);
}

Rational SymplecticForm::pair(const Tensor& x, const Tensor& y) const {
  if (x.rank() != 1 || y.rank() != 1 || x.var(0) != Var::up || y.var(0) != Var::up ||
      x.dim() != dim() || y.dim() != dim())
    throw std::invalid_argument("symplectic pair: need two vectors of matching dim");
  Rational sum(0);
  for (int i = 0; i < dim(); ++i) {
    if (x.at({i}) == 0) continue;
    for (int j = 0; j < dim(); ++j) sum += matrix_.at({i, j}) * x.at({i}) * y.at({j});
  }
  return sum;
}

Tensor flip_index(const Tensor& t, int slot, Flip dir, const SymplecticForm& form) {
  if (slot < 0 || slot >= t.rank()) throw std::invalid_argument("flip_index: slot out of range");
  if (t.dim() != form.dim()) throw std::invalid_argument("flip_index: dim mismatch");
  if (dir == Flip::lower && t.var(slot) != Var::up)
    throw std::invalid_argument("flip_index: lowering a down slot");
  if (dir == Flip::raise && t.var(slot) != Var::down)
    throw std::invalid_argument("flip_index: raising an up slot");
  std::vector<Var> var = t.variance();
  var[static_cast<std::size_t>(slot)] = (dir == Flip::lower) ? Var::down : Var::up;
  Tensor out(t.dim(), var);
  const Tensor& g = (dir == Flip::lower) ? form.matrix() : form.inverse_bivector();
  std::vector<int> src(static_cast<std::size_t>(t.rank()), 0);
  for_each_index(t.dim(), t.rank(), [&](std::span<const int> idx) {
    for (std::size_t i = 0; i < src.size(); ++i) src[i] = idx[i];
    const int i = idx[static_cast<std::size_t>(slot)];
    Rational sum(0);
    for (int p = 0; p < t.dim(); ++p) {
      src[static_cast<std::size_t>(slot)] = p;
      const Rational& tv = t.at(src);
      if (tv == 0) continue;
      // lower: T_i = T^p om_{pi};  raise: T^i = om^{ip} T_p.
      sum += (dir == Flip::lower) ? tv * g.at({p, i}) : g.at({i, p}) * tv;
    }
    out.at(idx) = sum;
  });
  return out;
}

Plane plane_kind(const SymplecticForm& form, const Tensor& x, const Tensor& y) {
  if (x.dim() != form.dim() || y.dim() != form.dim())
    throw std::invalid_argument("plane_kind: dimension mismatch");
  std::vector<std::vector<Rational>> rows = {tensor_to_vec(x), tensor_to_vec(y)};
  if (span_basis(rows).size() < 2) return {x, y, PlaneKind::dependent};
  return {x, y, form.pair(x, y) != 0 ? PlaneKind::symplectic : PlaneKind::isotropic};
}

Tensor project_plane(const SymplecticForm& form, const Tensor& x, const Tensor& y,
                     const Tensor& z) {
  Plane p = plane_kind(form, x, y);
  if (p.kind != PlaneKind::symplectic)
    throw std::invalid_argument("project_plane: span is not symplectic");
  Rational oxy = form.pair(x, y);
  return (form.pair(z, y) / oxy) * x - (form.pair(z, x) / oxy) * y;
}

std::string to_string(FormClass c) {
  switch (c) {
    case FormClass::zero: return "zero";
    case FormClass::definite_positive: return "definite_positive";
    case FormClass::definite_negative: return "definite_negative";
    case FormClass::degenerate_positive: return "degenerate_positive";
    case FormClass::degenerate_negative: return "degenerate_negative";
    case FormClass::indefinite: return "indefinite";
  }
  return "?";
}

FormClass classify_quadratic(const Mat& q) {
  if (q.rows() != 2 || q.cols() != 2) throw std::invalid_argument("classify_quadratic: need 2x2");
  if (q.at(0, 1) != q.at(1, 0)) throw std::invalid_argument("classify_quadratic: not symmetric");
  if (q.is_zero()) return FormClass::zero;
  Rational det = q.at(0, 0) * q.at(1, 1) - q.at(0, 1) * q.at(1, 0);
  Rational tr = q.at(0, 0) + q.at(1, 1);
  if (det < 0) return FormClass::indefinite;
  if (det == 0) return tr > 0 ? FormClass::degenerate_positive : FormClass::degenerate_negative;
  return tr > 0 ? FormClass::definite_positive : FormClass::definite_negative;
}

std::vector<Tensor> symplectic_basis_of_span(const SymplecticForm& form,
                                             const std::vector<Tensor>& vectors) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.push_back(tensor_to_vec(v));
  auto basis = span_basis(rows);
  if (basis.empty() || basis.size() % 2 != 0)
    throw std::invalid_argument("symplectic_basis_of_span: degenerate span");

  auto pair_of = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (int i = 0; i < form.dim(); ++i)
      for (int j = 0; j < form.dim(); ++j)
        s += form.matrix().at({i, j}) * a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return s;
  };

  std::vector<std::vector<Rational>> xs, us;
  std::vector<std::vector<Rational>> work = std::move(basis);
  while (!work.empty()) {
    std::vector<Rational> x = work.front();
    work.erase(work.begin());
    int partner = -1;
    for (std::size_t i = 0; i < work.size(); ++i)
      if (pair_of(work[i], x) != 0) {
        partner = static_cast<int>(i);
        break;
      }
    if (partner < 0) throw std::invalid_argument("symplectic_basis_of_span: degenerate span");
    std::vector<Rational> u = work[static_cast<std::size_t>(partner)];
    work.erase(work.begin() + partner);
    Rational scale = Rational(1) / pair_of(u, x);
    for (auto& c : u) c *= scale;  // omega(u, x) = 1
    for (auto& w : work) {
      Rational cu = pair_of(w, u), cx = pair_of(w, x);
      for (int i = 0; i < form.dim(); ++i)
        w[static_cast<std::size_t>(i)] +=
            cu * x[static_cast<std::size_t>(i)] - cx * u[static_cast<std::size_t>(i)];
    }
    xs.push_back(std::move(x));
    us.push_back(std::move(u));
  }
  std::vector<Tensor> out;
  for (const auto& v : xs) out.push_back(vector_tensor(form.dim(), v));
  for (const auto& v : us) out.push_back(vector_tensor(form.dim(), v));
  return out;
}

std::pair<Tensor, Tensor> complete_isotropic_pair(const SymplecticForm& form, const Tensor& x,
                                                  const Tensor& y) {
  Plane p = plane_kind(form, x, y);
  if (p.kind != PlaneKind::isotropic)
    throw std::invalid_argument("complete_isotropic_pair: need an independent isotropic pair");
  const int d = form.dim();
  auto omega_row = [&](const Tensor& v, Mat& m, int row) {
    // omega(unknown, v) as a linear functional of the unknown.
    for (int i = 0; i < d; ++i) {
      Rational s(0);
      for (int j = 0; j < d; ++j) s += form.matrix().at({i, j}) * v.at({j});
      m.at(row, i) = s;
    }
  };
  Mat mu(2, d);
  omega_row(x, mu, 0);
  omega_row(y, mu, 1);
  auto usol = solve(mu, {Rational(1), Rational(0)});
  if (!usol) throw std::invalid_argument("complete_isotropic_pair: no completion");
  Tensor u = vector_tensor(d, *usol);
  Mat mv(3, d);
  omega_row(x, mv, 0);
  omega_row(y, mv, 1);
  omega_row(u, mv, 2);
  auto vsol = solve(mv, {Rational(0), Rational(1), Rational(0)});
  if (!vsol) throw std::invalid_argument("complete_isotropic_pair: no completion");
  return {u, vector_tensor(d, *vsol)};
}

std::vector<Tensor> symplectic_annihilator(const SymplecticForm& form,
                                           const std::vector<Tensor>& span) {
  const int d = form.dim();
  std::vector<std::vector<Rational>> rows;
  for (const auto& s : span) {
    std::vector<Rational> row(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      Rational acc(0);
      for (int j = 0; j < d; ++j) acc += form.matrix().at({i, j}) * s.at({j});
      row[static_cast<std::size_t>(i)] = acc;
    }
    rows.push_back(std::move(row));
  }
  Mat m(static_cast<int>(rows.size()), d);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int j = 0; j < d; ++j) m.at(static_cast<int>(r), j) = rows[r][static_cast<std::size_t>(j)];
  std::vector<Tensor> out;
  for (const auto& k : kernel_basis(m)) out.push_back(vector_tensor(d, k));
  return out;
}

}  // namespace symcurv
