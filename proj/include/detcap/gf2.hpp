#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace detcap {

// Packed binary vector, 64 entries per word. Bits past size() are always 0.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  static BitVector from_string(const std::string& bits);  // "1011"

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  bool any() const;
  std::size_t count() const;
  // Index of the lowest set bit at or after `from`, or size() when none.
  std::size_t find_next(std::size_t from) const;

  std::string to_string() const;

  bool operator==(const BitVector&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

BitVector operator^(BitVector a, const BitVector& b);

// Opaque per-axis identifier of a row or column.
using Label = std::uint64_t;

// Dense GF(2) matrix with a distinct label on every row and column, so
// sub-matrices can be cut out by identity instead of by position.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  // Labels default to 0..rows-1 and 0..cols-1.
  Gf2Matrix(std::size_t rows, std::size_t cols);
  Gf2Matrix(std::vector<Label> row_labels, std::vector<Label> col_labels);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) {
    data_[r].set(c, value);
  }

  const BitVector& row(std::size_t r) const { return data_[r]; }
  void set_row(std::size_t r, BitVector bits);

  const std::vector<Label>& row_labels() const { return row_labels_; }
  const std::vector<Label>& col_labels() const { return col_labels_; }
  std::optional<std::size_t> row_of(Label label) const;
  std::optional<std::size_t> col_of(Label label) const;

  // Sub-matrix addressed by labels, in the order given.
  Gf2Matrix select(std::span<const Label> rows,
                   std::span<const Label> cols) const;

  // Appends a row; the label must not already be present.
  void append_row(Label label, BitVector bits);

  std::string to_string() const;

  bool operator==(const Gf2Matrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
  std::vector<Label> row_labels_;
  std::vector<Label> col_labels_;
};

std::size_t rank(const Gf2Matrix& m);

// A set R of row indices with XOR_{r in R} row_r == target, or nullopt when
// target is outside the row space. Indices are returned ascending.
std::optional<std::vector<std::size_t>> solve_row_membership(
    const Gf2Matrix& m, const BitVector& target);

BitVector row_sum(const Gf2Matrix& m, std::span<const std::size_t> rows);

Gf2Matrix transpose(const Gf2Matrix& m);

// Product over GF(2). Row labels come from a, column labels from b.
Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b);

// Row vector times matrix.
BitVector multiply(const BitVector& v, const Gf2Matrix& m);

// Inverse of a square matrix, nullopt when singular. Row labels of the result
// are the column labels of m and vice versa.
std::optional<Gf2Matrix> inverse(const Gf2Matrix& m);

}  // namespace detcap
