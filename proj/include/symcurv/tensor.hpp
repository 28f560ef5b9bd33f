#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcurv/rational.hpp"

namespace symcurv {

enum class Var : std::uint8_t { up, down };
enum class Sym : std::uint8_t { symmetric, antisymmetric };
enum class Flip : std::uint8_t { raise, lower };

// Dense tensor of exact rationals with per-slot variance, on an
// even-dimensional space. Indices are abstract-slot based: slot order
// never changes under raising/lowering.
class Tensor {
 public:
  Tensor() : Tensor(2, {}) {}  // rank-0 zero placeholder
  Tensor(int dim, std::vector<Var> variance);

  static Tensor scalar_tensor(int dim, const Rational& value);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(var_.size()); }
  const std::vector<Var>& variance() const { return var_; }
  Var var(int slot) const { return var_.at(static_cast<std::size_t>(slot)); }

  const Rational& at(std::span<const int> idx) const { return c_[offset(idx)]; }
  Rational& at(std::span<const int> idx) { return c_[offset(idx)]; }
  const Rational& at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }
  Rational& at(std::initializer_list<int> idx) {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  const std::vector<Rational>& components() const { return c_; }
  std::vector<Rational>& components() { return c_; }

  bool is_zero() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Rational& s);

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Rational& s) { return a *= s; }
  friend Tensor operator*(const Rational& s, Tensor a) { return a *= s; }
  friend Tensor operator-(Tensor a) { return a *= Rational(-1); }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.dim_ == b.dim_ && a.var_ == b.var_ && a.c_ == b.c_;
  }

  std::size_t offset(std::span<const int> idx) const;

 private:
  int dim_;
  std::vector<Var> var_;
  std::vector<Rational> c_;
};

// Calls fn(idx) for every multi-index in [0,dim)^rank, lexicographically.
template <typename Fn>
void for_each_index(int dim, int rank, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(rank), 0);
  for (;;) {
    fn(std::span<const int>(idx));
    int s = rank - 1;
    while (s >= 0 && ++idx[static_cast<std::size_t>(s)] == dim) {
      idx[static_cast<std::size_t>(s)] = 0;
      --s;
    }
    if (s < 0) break;
  }
}

Tensor tensor_product(const Tensor& a, const Tensor& b);

// Trace pairing of an up slot against a down slot; rank drops by two.
Tensor contract(const Tensor& t, int up_slot, int down_slot);

// Average over all permutations of `slots` (signed when antisymmetric);
// the slots must carry the same variance.
Tensor sym_part(const Tensor& t, const std::vector<int>& slots, Sym mode);

// Rearranges slots: result slot i holds what was at slot perm[i].
Tensor permute_slots(const Tensor& t, const std::vector<int>& perm);

Tensor basis_vector(int dim, int i);
Tensor basis_covector(int dim, int i);
Tensor vector_tensor(int dim, const std::vector<Rational>& comps);
Tensor covector_tensor(int dim, const std::vector<Rational>& comps);

}  // namespace symcurv
