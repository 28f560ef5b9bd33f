#pragma once

#include <optional>
#include <vector>

#include "symcurv/rational.hpp"

namespace symcurv {

// Small exact rational matrix, row-major. Only what the geometry needs:
// Gauss-Jordan elimination and its consequences.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(Mat a, const Mat& b);
  friend Mat operator-(Mat a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) = default;

  Mat transposed() const;
  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Mat& m);

int rank(Mat m);

std::optional<Mat> inverse(const Mat& m);

// One solution of A x = b, if any.
std::optional<std::vector<Rational>> solve(const Mat& a, const std::vector<Rational>& b);

// Basis of the null space of A, as rows.
std::vector<std::vector<Rational>> kernel_basis(const Mat& a);

// Basis of the row space (i.e. span of the given vectors), as rows.
std::vector<std::vector<Rational>> span_basis(const std::vector<std::vector<Rational>>& vectors);

}  // namespace symcurv
