#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qtwist/ring/errors.hpp"
#include "qtwist/ring/rational.hpp"

namespace qtwist {

/// Row-major dense tensor with exact entries.
template <class T>
class DenseTensor {
 public:
  using Shape = std::vector<std::size_t>;

  DenseTensor() : data_(1, T(0)) {}  // rank-0 scalar zero
  explicit DenseTensor(Shape shape) : shape_(std::move(shape)), data_(count(shape_), T(0)) {}
  DenseTensor(Shape shape, std::vector<T> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != count(shape_)) throw DimensionMismatch("entry count does not match shape");
  }

  static DenseTensor scalar(const T& v) { return DenseTensor({}, {v}); }
  static DenseTensor identity(std::size_t n) {
    DenseTensor t({n, n});
    for (std::size_t i = 0; i < n; ++i) t(i, i) = T(1);
    return t;
  }
  /// Matrix unit E_ij (0-based) of size n.
  static DenseTensor unit(std::size_t n, std::size_t i, std::size_t j) {
    DenseTensor t({n, n});
    t(i, j) = T(1);
    return t;
  }

  const Shape& shape() const noexcept { return shape_; }
  std::size_t rank() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return data_.size(); }
  const std::vector<T>& data() const noexcept { return data_; }
  std::vector<T>& data() noexcept { return data_; }

  T& at(const std::vector<std::size_t>& idx) { return data_[offset(idx)]; }
  const T& at(const std::vector<std::size_t>& idx) const { return data_[offset(idx)]; }

  template <class... I>
  T& operator()(I... idx) {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  template <class... I>
  const T& operator()(I... idx) const {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) { return v == T(0); });
  }
  std::size_t nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const T& v) { return v != T(0); }));
  }

  DenseTensor& operator+=(const DenseTensor& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  DenseTensor& operator-=(const DenseTensor& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  DenseTensor& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }
  friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
  friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
  friend DenseTensor operator-(DenseTensor a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend DenseTensor operator*(DenseTensor a, const T& s) { return a *= s; }
  friend DenseTensor operator*(const T& s, DenseTensor a) { return a *= s; }
  friend bool operator==(const DenseTensor& a, const DenseTensor& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }
  friend bool operator!=(const DenseTensor& a, const DenseTensor& b) { return !(a == b); }

  /// Decomposes a flat offset into a multi-index.
  std::vector<std::size_t> unravel(std::size_t flat) const {
    std::vector<std::size_t> idx(shape_.size());
    for (std::size_t k = shape_.size(); k-- > 0;) {
      idx[k] = flat % shape_[k];
      flat /= shape_[k];
    }
    return idx;
  }

  std::size_t offset(const std::vector<std::size_t>& idx) const {
    if (idx.size() != shape_.size()) throw DimensionMismatch("index rank mismatch");
    std::size_t off = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] >= shape_[k]) throw DimensionMismatch("index out of range");
      off = off * shape_[k] + idx[k];
    }
    return off;
  }

  static std::size_t count(const Shape& s) {
    return std::accumulate(s.begin(), s.end(), std::size_t{1}, std::multiplies<>());
  }

 private:
  void require_same_shape(const DenseTensor& o) const {
    if (shape_ != o.shape_) throw DimensionMismatch("tensor shapes differ");
  }

  Shape shape_;
  std::vector<T> data_;
};

/// a ⊗ b: shape is the concatenation.
template <class T>
DenseTensor<T> outer(const DenseTensor<T>& a, const DenseTensor<T>& b) {
  auto shape = a.shape();
  shape.insert(shape.end(), b.shape().begin(), b.shape().end());
  DenseTensor<T> out(shape);
  std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.data()[i] == T(0)) continue;
    for (std::size_t j = 0; j < nb; ++j) out.data()[i * nb + j] = a.data()[i] * b.data()[j];
  }
  return out;
}

/// Reorders axes: result axis k is input axis perm[k].
template <class T>
DenseTensor<T> permute(const DenseTensor<T>& t, const std::vector<std::size_t>& perm) {
  if (perm.size() != t.rank()) throw DimensionMismatch("permutation rank mismatch");
  std::vector<bool> seen(perm.size(), false);
  typename DenseTensor<T>::Shape shape;
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) throw DimensionMismatch("not a permutation of axes");
    seen[p] = true;
    shape.push_back(t.shape()[p]);
  }
  DenseTensor<T> out(shape);
  std::vector<std::size_t> dst(perm.size());
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (t.data()[f] == T(0)) continue;
    auto src = t.unravel(f);
    for (std::size_t k = 0; k < perm.size(); ++k) dst[k] = src[perm[k]];
    out.at(dst) = t.data()[f];
  }
  return out;
}

/// Trace-contraction over each listed pair of axes. Remaining axes keep
/// their relative order.
template <class T>
DenseTensor<T> tensor_contract(const DenseTensor<T>& t,
                               const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<int> role(t.rank(), -1);  // -1 free, otherwise pair number
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [a, b] = pairs[k];
    if (a >= t.rank() || b >= t.rank() || a == b || role[a] != -1 || role[b] != -1) {
      throw DimensionMismatch("invalid contraction axes");
    }
    if (t.shape()[a] != t.shape()[b]) throw DimensionMismatch("contracted axes differ in dimension");
    role[a] = role[b] = static_cast<int>(k);
  }
  typename DenseTensor<T>::Shape shape;
  std::vector<std::size_t> free_axes;
  for (std::size_t k = 0; k < t.rank(); ++k) {
    if (role[k] == -1) {
      free_axes.push_back(k);
      shape.push_back(t.shape()[k]);
    }
  }
  DenseTensor<T> out(shape);
  std::vector<std::size_t> dst(free_axes.size());
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (t.data()[f] == T(0)) continue;
    auto src = t.unravel(f);
    bool diagonal = true;
    for (auto [a, b] : pairs) {
      if (src[a] != src[b]) {
        diagonal = false;
        break;
      }
    }
    if (!diagonal) continue;
    for (std::size_t k = 0; k < free_axes.size(); ++k) dst[k] = src[free_axes[k]];
    out.at(dst) += t.data()[f];
  }
  return out;
}

/// Contraction of axis ia of a with axis ib of b without materializing a ⊗ b.
/// Result axes: free axes of a, then free axes of b.
template <class T>
DenseTensor<T> tensordot(const DenseTensor<T>& a, std::size_t ia, const DenseTensor<T>& b, std::size_t ib) {
  if (ia >= a.rank() || ib >= b.rank()) throw DimensionMismatch("invalid contraction axis");
  if (a.shape()[ia] != b.shape()[ib]) throw DimensionMismatch("contracted axes differ in dimension");
  typename DenseTensor<T>::Shape shape;
  for (std::size_t k = 0; k < a.rank(); ++k) {
    if (k != ia) shape.push_back(a.shape()[k]);
  }
  for (std::size_t k = 0; k < b.rank(); ++k) {
    if (k != ib) shape.push_back(b.shape()[k]);
  }
  DenseTensor<T> out(shape);
  // Bucket the nonzeros of b by their contracted index.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_index(b.shape()[ib]);
  {
    std::size_t stride_after = 1;
    for (std::size_t k = ib + 1; k < b.rank(); ++k) stride_after *= b.shape()[k];
    std::size_t dim = b.shape()[ib];
    for (std::size_t f = 0; f < b.size(); ++f) {
      if (b.data()[f] == T(0)) continue;
      std::size_t c = (f / stride_after) % dim;
      std::size_t reduced = (f / (stride_after * dim)) * stride_after + f % stride_after;
      by_index[c].emplace_back(reduced, f);
    }
  }
  std::size_t nb_free = DenseTensor<T>::count(b.shape()) / b.shape()[ib];
  std::size_t stride_after = 1;
  for (std::size_t k = ia + 1; k < a.rank(); ++k) stride_after *= a.shape()[k];
  std::size_t dim = a.shape()[ia];
  for (std::size_t f = 0; f < a.size(); ++f) {
    if (a.data()[f] == T(0)) continue;
    std::size_t c = (f / stride_after) % dim;
    std::size_t reduced = (f / (stride_after * dim)) * stride_after + f % stride_after;
    for (auto [rb, fb] : by_index[c]) out.data()[reduced * nb_free + rb] += a.data()[f] * b.data()[fb];
  }
  return out;
}

/// Ordinary matrix product of rank-2 tensors.
template <class T>
DenseTensor<T> matmul(const DenseTensor<T>& a, const DenseTensor<T>& b) {
  if (a.rank() != 2 || b.rank() != 2) throw DimensionMismatch("matmul needs matrices");
  return tensordot(a, 1, b, 0);
}

template <class T>
DenseTensor<T> transpose(const DenseTensor<T>& a) {
  return permute(a, {1, 0});
}

/// Inverse of a square matrix over a field-like T by Gauss-Jordan elimination.
template <class T>
DenseTensor<T> inverse(const DenseTensor<T>& m) {
  if (m.rank() != 2 || m.shape()[0] != m.shape()[1]) throw DimensionMismatch("inverse needs a square matrix");
  std::size_t n = m.shape()[0];
  DenseTensor<T> a = m;
  DenseTensor<T> inv = DenseTensor<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == T(0)) ++piv;
    if (piv == n) throw DomainError("matrix is singular");
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(piv, k), a(col, k));
        std::swap(inv(piv, k), inv(col, k));
      }
    }
    T p = T(1) / a(col, col);
    for (std::size_t k = 0; k < n; ++k) {
      a(col, k) = a(col, k) * p;
      inv(col, k) = inv(col, k) * p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a(row, col) == T(0)) continue;
      T f = a(row, col);
      for (std::size_t k = 0; k < n; ++k) {
        a(row, k) = a(row, k) - f * a(col, k);
        inv(row, k) = inv(row, k) - f * inv(col, k);
      }
    }
  }
  return inv;
}

using RTensor = DenseTensor<Rational>;

}  // namespace qtwist
