#include "symcurv/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace symcurv {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat: size mismatch in *");
  Mat out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += v * b.at(k, j);
    }
  return out;
}

Mat operator+(Mat a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat: size mismatch in +");
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a.at(i, j) += b.at(i, j);
  return a;
}

Mat operator-(Mat a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat: size mismatch in -");
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= b.at(i, j);
  return a;
}

Mat Mat::transposed() const {
  Mat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& r) { return r == 0; });
}

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Rational inv = Rational(1) / m.at(row, col);
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    return std::nullopt;
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

std::optional<std::vector<Rational>> solve(const Mat& a, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: size mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  auto pivots = rref(aug);
  for (int p : pivots)
    if (p == a.cols()) return std::nullopt;  // inconsistent row 0 = 1
  std::vector<Rational> x(static_cast<std::size_t>(a.cols()), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), a.cols());
  return x;
}

std::vector<std::vector<Rational>> kernel_basis(const Mat& a) {
  Mat m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<Rational>> basis;
  for (int freecol = 0; freecol < a.cols(); ++freecol) {
    if (is_pivot[static_cast<std::size_t>(freecol)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(a.cols()), Rational(0));
    v[static_cast<std::size_t>(freecol)] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), freecol);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rational>> span_basis(const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty()) return {};
  int cols = static_cast<int>(vectors[0].size());
  Mat m(static_cast<int>(vectors.size()), cols);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (static_cast<int>(vectors[i].size()) != cols)
      throw std::invalid_argument("span_basis: ragged input");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = vectors[i][static_cast<std::size_t>(j)];
  }
  auto pivots = rref(m);
  std::vector<std::vector<Rational>> basis;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Rational> v(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) v[static_cast<std::size_t>(j)] = m.at(static_cast<int>(r), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace symcurv
