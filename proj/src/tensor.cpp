#include "symcurv/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace symcurv {

namespace {

std::size_t pow_size(int dim, int rank) {
  std::size_t n = 1;
  for (int i = 0; i < rank; ++i) n *= static_cast<std::size_t>(dim);
  return n;
}

}  // namespace

Tensor::Tensor(int dim, std::vector<Var> variance)
    : dim_(dim), var_(std::move(variance)) {
  if (dim_ <= 0 || dim_ % 2 != 0) throw std::invalid_argument("tensor: dim must be positive and even");
  c_.assign(pow_size(dim_, rank()), Rational(0));
}

Tensor Tensor::scalar_tensor(int dim, const Rational& value) {
  Tensor t(dim, {});
  t.c_[0] = value;
  return t;
}

std::size_t Tensor::offset(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != rank()) throw std::invalid_argument("tensor: index rank mismatch");
  std::size_t off = 0;
  for (int v : idx) {
    if (v < 0 || v >= dim_) throw std::out_of_range("tensor: index out of range");
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(v);
  }
  return off;
}

bool Tensor::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (dim_ != o.dim_ || var_ != o.var_) throw std::invalid_argument("tensor: shape mismatch in +");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (dim_ != o.dim_ || var_ != o.var_) throw std::invalid_argument("tensor: shape mismatch in -");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tensor_product: dim mismatch");
  std::vector<Var> var = a.variance();
  var.insert(var.end(), b.variance().begin(), b.variance().end());
  Tensor out(a.dim(), var);
  const std::size_t nb = b.components().size();
  for (std::size_t ia = 0; ia < a.components().size(); ++ia) {
    const Rational& av = a.components()[ia];
    if (av == 0) continue;
    for (std::size_t ib = 0; ib < nb; ++ib)
      out.components()[ia * nb + ib] = av * b.components()[ib];
  }
  return out;
}

Tensor contract(const Tensor& t, int up_slot, int down_slot) {
  const int r = t.rank();
  if (up_slot < 0 || up_slot >= r || down_slot < 0 || down_slot >= r || up_slot == down_slot)
    throw std::invalid_argument("contract: bad slots");
  if (t.var(up_slot) != Var::up || t.var(down_slot) != Var::down)
    throw std::invalid_argument("contract: variance mismatch (need one up, one down)");
  std::vector<Var> var;
  std::vector<int> keep;
  for (int s = 0; s < r; ++s)
    if (s != up_slot && s != down_slot) {
      var.push_back(t.var(s));
      keep.push_back(s);
    }
  Tensor out(t.dim(), var);
  std::vector<int> full(static_cast<std::size_t>(r), 0);
  for_each_index(t.dim(), out.rank(), [&](std::span<const int> idx) {
    for (std::size_t i = 0; i < keep.size(); ++i) full[static_cast<std::size_t>(keep[i])] = idx[i];
    Rational sum(0);
    for (int p = 0; p < t.dim(); ++p) {
      full[static_cast<std::size_t>(up_slot)] = p;
      full[static_cast<std::size_t>(down_slot)] = p;
      sum += t.at(full);
    }
    out.at(idx) = sum;
  });
  return out;
}

namespace {

// All permutations of 0..n-1 with parity, in a deterministic order.
void permutations_signed(int n, std::vector<std::pair<std::vector<int>, int>>& out) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
    out.emplace_back(perm, inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

Tensor sym_part(const Tensor& t, const std::vector<int>& slots, Sym mode) {
  const int m = static_cast<int>(slots.size());
  if (m == 0) return t;
  std::vector<bool> seen(static_cast<std::size_t>(t.rank()), false);
  for (int s : slots) {
    if (s < 0 || s >= t.rank()) throw std::invalid_argument("sym_part: slot out of range");
    if (seen[static_cast<std::size_t>(s)]) throw std::invalid_argument("sym_part: repeated slot");
    seen[static_cast<std::size_t>(s)] = true;
    if (t.var(s) != t.var(slots[0])) throw std::invalid_argument("sym_part: mixed-variance slots");
  }
  std::vector<std::pair<std::vector<int>, int>> perms;
  permutations_signed(m, perms);
  Tensor out(t.dim(), t.variance());
  std::vector<int> src(static_cast<std::size_t>(t.rank()), 0);
  const Rational norm(1, static_cast<long long>(perms.size()));
  for_each_index(t.dim(), t.rank(), [&](std::span<const int> idx) {
    Rational sum(0);
    for (const auto& [perm, sign] : perms) {
      for (std::size_t i = 0; i < src.size(); ++i) src[i] = idx[i];
      for (int i = 0; i < m; ++i)
        src[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])] =
            idx[static_cast<std::size_t>(slots[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])])];
      if (mode == Sym::antisymmetric && sign < 0)
        sum -= t.at(src);
      else
        sum += t.at(src);
    }
    out.at(idx) = sum * norm;
  });
  return out;
}

Tensor permute_slots(const Tensor& t, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != t.rank()) throw std::invalid_argument("permute_slots: bad permutation");
  std::vector<Var> var(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) var[i] = t.var(perm[i]);
  Tensor out(t.dim(), var);
  std::vector<int> src(perm.size(), 0);
  for_each_index(t.dim(), t.rank(), [&](std::span<const int> idx) {
    for (std::size_t i = 0; i < perm.size(); ++i) src[static_cast<std::size_t>(perm[i])] = idx[i];
    out.at(idx) = t.at(src);
  });
  return out;
}

Tensor basis_vector(int dim, int i) {
  Tensor t(dim, {Var::up});
  t.at({i}) = Rational(1);
  return t;
}

Tensor basis_covector(int dim, int i) {
  Tensor t(dim, {Var::down});
  t.at({i}) = Rational(1);
  return t;
}

Tensor vector_tensor(int dim, const std::vector<Rational>& comps) {
  if (static_cast<int>(comps.size()) != dim) throw std::invalid_argument("vector_tensor: size mismatch");
  Tensor t(dim, {Var::up});
  for (int i = 0; i < dim; ++i) t.at({i}) = comps[static_cast<std::size_t>(i)];
  return t;
}

Tensor covector_tensor(int dim, const std::vector<Rational>& comps) {
  if (static_cast<int>(comps.size()) != dim) throw std::invalid_argument("covector_tensor: size mismatch");
  Tensor t(dim, {Var::down});
  for (int i = 0; i < dim; ++i) t.at({i}) = comps[static_cast<std::size_t>(i)];
  return t;
}

}  // namespace symcurv
