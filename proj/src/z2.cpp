#include "scx/z2.hpp"

#include <string>

#include "scx/error.hpp"

namespace scx {

BitVector BitVector::from_indices(std::size_t size, const std::vector<std::size_t>& indices) {
  BitVector v(size);
  for (std::size_t i : indices) v.set(i);
  return v;
}

BitVector BitVector::ones(std::size_t size) {
  BitVector v(size);
  for (std::size_t i = 0; i < size; ++i) v.set(i);
  return v;
}

BitVector BitVector::from_word(std::size_t size, std::uint64_t bits) {
  BitVector v(size);
  if (!v.words_.empty()) v.words_[0] = size >= 64 ? bits : bits & ((std::uint64_t{1} << size) - 1);
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_)
    throw Error(Errc::ShapeMismatch, "xor of bit vectors of length " + std::to_string(size_) + " and " +
                                         std::to_string(other.size_));
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::size_t BitVector::weight() const noexcept {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::any() const noexcept {
  for (auto word : words_)
    if (word) return true;
  return false;
}

std::size_t BitVector::lowest() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return size_;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

Z2Matrix Z2Matrix::identity(std::size_t n) {
  Z2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitVector Z2Matrix::column(std::size_t c) const {
  BitVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    if (rows_[r].test(c)) out.set(r);
  return out;
}

Z2Matrix Z2Matrix::transpose() const {
  Z2Matrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c : rows_[r].support()) t.set(c, r);
  return t;
}

BitVector Z2Matrix::operator*(const BitVector& x) const {
  if (x.size() != cols_) throw Error(Errc::ShapeMismatch, "matrix-vector product");
  BitVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    std::uint64_t acc = 0;
    const auto& a = rows_[r].words();
    const auto& b = x.words();
    for (std::size_t w = 0; w < a.size(); ++w) acc ^= a[w] & b[w];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

Z2Matrix Z2Matrix::operator*(const Z2Matrix& other) const {
  if (other.rows() != cols_) throw Error(Errc::ShapeMismatch, "matrix-matrix product");
  Z2Matrix out(rows(), other.cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    BitVector acc(other.cols());
    for (std::size_t c : rows_[r].support()) acc ^= other.row(c);
    out.rows_[r] = std::move(acc);
  }
  return out;
}

bool Z2Matrix::is_zero() const noexcept {
  for (const auto& r : rows_)
    if (r.any()) return false;
  return true;
}

bool Z2Basis::insert(BitVector v) {
  v = reduce(std::move(v));
  if (v.none()) return false;
  const std::size_t pivot = v.lowest();
  for (auto& b : vectors_)
    if (b.test(pivot)) b ^= v;
  vectors_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

BitVector Z2Basis::reduce(BitVector v) const {
  if (v.size() != ambient_) throw Error(Errc::ShapeMismatch, "vector length differs from basis ambient dimension");
  for (std::size_t i = 0; i < vectors_.size(); ++i)
    if (v.test(pivots_[i])) v ^= vectors_[i];
  return v;
}

Z2RankResult z2_rank_and_membership(const Z2Matrix& m, const BitVector* probe) {
  if (probe && probe->size() != m.rows())
    throw Error(Errc::ShapeMismatch, "probe length " + std::to_string(probe->size()) + " vs " +
                                         std::to_string(m.rows()) + " rows");
  Z2RankResult result;
  result.basis = Z2Basis(m.rows());
  const Z2Matrix t = m.transpose();
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (result.basis.insert(t.row(c))) result.pivot_columns.push_back(c);
  result.rank = result.basis.rank();
  if (probe) result.probe_in_column_space = result.basis.contains(*probe);
  return result;
}

std::size_t z2_rank(const Z2Matrix& m) {
  // Row space has the same dimension and avoids the transpose.
  Z2Basis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
  return basis.rank();
}

}  // namespace scx
