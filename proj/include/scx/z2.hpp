#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace scx {

/// Dense bit vector over Z2, packed in 64-bit words. Bits past size() are
/// kept zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector from_indices(std::size_t size, const std::vector<std::size_t>& indices);
  static BitVector ones(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  std::size_t weight() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  /// Index of the lowest set bit, or size() when zero.
  std::size_t lowest() const noexcept;
  std::vector<std::size_t> support() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  /// First word; the whole vector when size() <= 64.
  std::uint64_t word0() const noexcept { return words_.empty() ? 0 : words_[0]; }
  static BitVector from_word(std::size_t size, std::uint64_t bits);

  bool operator==(const BitVector&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order of the sorted supports of two equal-weight sets:
/// the first differing element decides.
constexpr bool support_less(std::uint64_t a, std::uint64_t b) noexcept {
  const std::uint64_t d = a ^ b;
  return d != 0 && (a & (d & (~d + 1))) != 0;
}

/// A k-chain (or k-cochain) over Z2, identified with the subset of
/// k-simplexes carrying coefficient 1.
struct Z2Chain {
  int dimension = 0;
  BitVector bits;

  std::size_t weight() const noexcept { return bits.weight(); }
  std::vector<std::size_t> support() const { return bits.support(); }
  bool operator==(const Z2Chain&) const = default;
};

/// Matrix over Z2 with bit-packed rows.
class Z2Matrix {
 public:
  Z2Matrix() = default;
  Z2Matrix(std::size_t rows, std::size_t cols) : rows_(rows, BitVector(cols)), cols_(cols) {}

  static Z2Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool test(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector column(std::size_t c) const;

  Z2Matrix transpose() const;
  /// Throws ShapeMismatch.
  BitVector operator*(const BitVector& x) const;
  Z2Matrix operator*(const Z2Matrix& other) const;
  bool is_zero() const noexcept;

  bool operator==(const Z2Matrix&) const = default;

 private:
  std::vector<BitVector> rows_;
  std::size_t cols_ = 0;
};

/// Fully reduced echelon basis of a subspace of Z2^n. The pivot of each
/// basis vector is its lowest set bit and no other basis vector has that
/// bit set, so reduce() is a linear projection whose output is the unique
/// representative of the coset v + span with zeros on every pivot.
class Z2Basis {
 public:
  explicit Z2Basis(std::size_t ambient = 0) : ambient_(ambient) {}

  /// Returns true if the rank increased.
  bool insert(BitVector v);
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).none(); }

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return vectors_.size(); }
  const std::vector<BitVector>& vectors() const noexcept { return vectors_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  std::size_t ambient_;
  std::vector<BitVector> vectors_;
  std::vector<std::size_t> pivots_;
};

struct Z2RankResult {
  std::size_t rank = 0;
  /// Column-space basis, reusable for further membership tests.
  Z2Basis basis;
  /// Columns of the input that contributed a new pivot, in order.
  std::vector<std::size_t> pivot_columns;
  std::optional<bool> probe_in_column_space;
};

/// Rank of M and, when `probe` is given, whether it lies in the column
/// space. Throws ShapeMismatch if probe->size() != M.rows().
Z2RankResult z2_rank_and_membership(const Z2Matrix& m, const BitVector* probe = nullptr);

std::size_t z2_rank(const Z2Matrix& m);

}  // namespace scx
