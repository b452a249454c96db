#include "detcap/gf2.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>
#include <utility>

#include "detcap/errors.hpp"

namespace detcap {

namespace {

std::vector<Label> iota_labels(std::size_t n) {
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  return labels;
}

void require_distinct(const std::vector<Label>& labels, const char* axis) {
  std::unordered_set<Label> seen;
  seen.reserve(labels.size());
  for (Label l : labels) {
    if (!seen.insert(l).second) {
      throw ContractViolation(std::string("duplicate ") + axis + " label " +
                              std::to_string(l));
    }
  }
}

}  // namespace

BitVector::BitVector(std::size_t size)
    : size_(size), words_((size + 63) / 64, 0) {}

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ContractViolation("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) {
    throw ContractViolation("xor of bit vectors with different lengths");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVector operator^(BitVector a, const BitVector& b) {
  a ^= b;
  return a;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

std::size_t BitVector::find_next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word != 0) {
      return std::min(size_, (w << 6) + std::countr_zero(word));
    }
    if (++w == words_.size()) return size_;
    word = words_[w];
  }
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : Gf2Matrix(iota_labels(rows), iota_labels(cols)) {}

Gf2Matrix::Gf2Matrix(std::vector<Label> row_labels,
                     std::vector<Label> col_labels)
    : cols_(col_labels.size()),
      data_(row_labels.size(), BitVector(col_labels.size())),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  require_distinct(row_labels_, "row");
  require_distinct(col_labels_, "column");
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw ContractViolation("ragged rows in matrix literal");
    }
    m.data_[r] = BitVector::from_string(rows[r]);
  }
  return m;
}

void Gf2Matrix::set_row(std::size_t r, BitVector bits) {
  if (bits.size() != cols_) throw ContractViolation("row length mismatch");
  data_[r] = std::move(bits);
}

std::optional<std::size_t> Gf2Matrix::row_of(Label label) const {
  auto it = std::find(row_labels_.begin(), row_labels_.end(), label);
  if (it == row_labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - row_labels_.begin());
}

std::optional<std::size_t> Gf2Matrix::col_of(Label label) const {
  auto it = std::find(col_labels_.begin(), col_labels_.end(), label);
  if (it == col_labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - col_labels_.begin());
}

Gf2Matrix Gf2Matrix::select(std::span<const Label> rows,
                            std::span<const Label> cols) const {
  std::vector<std::size_t> ri, ci;
  for (Label l : rows) {
    auto r = row_of(l);
    if (!r) throw ContractViolation("unknown row label " + std::to_string(l));
    ri.push_back(*r);
  }
  for (Label l : cols) {
    auto c = col_of(l);
    if (!c) throw ContractViolation("unknown column label " + std::to_string(l));
    ci.push_back(*c);
  }
  Gf2Matrix out(std::vector<Label>(rows.begin(), rows.end()),
                std::vector<Label>(cols.begin(), cols.end()));
  for (std::size_t r = 0; r < ri.size(); ++r) {
    for (std::size_t c = 0; c < ci.size(); ++c) {
      if (get(ri[r], ci[c])) out.set(r, c);
    }
  }
  return out;
}

void Gf2Matrix::append_row(Label label, BitVector bits) {
  if (bits.size() != cols_) throw ContractViolation("row length mismatch");
  if (row_of(label)) {
    throw ContractViolation("duplicate row label " + std::to_string(label));
  }
  row_labels_.push_back(label);
  data_.push_back(std::move(bits));
}

std::string Gf2Matrix::to_string() const {
  std::string s;
  for (const auto& r : data_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

std::size_t rank(const Gf2Matrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < rows.size(); ++c) {
    std::size_t p = pivot_row;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[pivot_row], rows[p]);
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r].get(c)) rows[r] ^= rows[pivot_row];
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::optional<std::vector<std::size_t>> solve_row_membership(
    const Gf2Matrix& m, const BitVector& target) {
  if (target.size() != m.cols()) {
    throw ContractViolation("target length " + std::to_string(target.size()) +
                            " does not match " + std::to_string(m.cols()) +
                            " columns");
  }
  const std::size_t n = m.rows();
  // Each working row carries the set of original rows it is the sum of.
  std::vector<BitVector> rows, combos;
  rows.reserve(n);
  combos.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    rows.push_back(m.row(r));
    combos.emplace_back(n);
    combos.back().set(r);
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < n; ++c) {
    std::size_t p = pivot_row;
    while (p < n && !rows[p].get(c)) ++p;
    if (p == n) continue;
    std::swap(rows[pivot_row], rows[p]);
    std::swap(combos[pivot_row], combos[p]);
    for (std::size_t r = pivot_row + 1; r < n; ++r) {
      if (rows[r].get(c)) {
        rows[r] ^= rows[pivot_row];
        combos[r] ^= combos[pivot_row];
      }
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }

  // Pivot row i is zero left of pivot_cols[i], so one left-to-right sweep
  // reduces the target completely.
  BitVector residue = target;
  BitVector combo(n);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    if (residue.get(pivot_cols[i])) {
      residue ^= rows[i];
      combo ^= combos[i];
    }
  }
  if (residue.any()) return std::nullopt;

  std::vector<std::size_t> subset;
  for (std::size_t r = combo.find_next(0); r < n; r = combo.find_next(r + 1)) {
    subset.push_back(r);
  }
  return subset;
}

BitVector row_sum(const Gf2Matrix& m, std::span<const std::size_t> rows) {
  BitVector sum(m.cols());
  for (std::size_t r : rows) {
    if (r >= m.rows()) {
      throw ContractViolation("row index " + std::to_string(r) +
                              " out of range");
    }
    sum ^= m.row(r);
  }
  return sum;
}

Gf2Matrix transpose(const Gf2Matrix& m) {
  Gf2Matrix t(m.col_labels(), m.row_labels());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const BitVector& row = m.row(r);
    for (std::size_t c = row.find_next(0); c < m.cols();
         c = row.find_next(c + 1)) {
      t.set(c, r);
    }
  }
  return t;
}

Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ContractViolation("inner dimensions differ in matrix product");
  }
  Gf2Matrix out(a.row_labels(), b.col_labels());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out.set_row(r, multiply(a.row(r), b));
  }
  return out;
}

BitVector multiply(const BitVector& v, const Gf2Matrix& m) {
  if (v.size() != m.rows()) {
    throw ContractViolation("vector length does not match matrix rows");
  }
  BitVector out(m.cols());
  for (std::size_t r = v.find_next(0); r < v.size(); r = v.find_next(r + 1)) {
    out ^= m.row(r);
  }
  return out;
}

std::optional<Gf2Matrix> inverse(const Gf2Matrix& m) {
  if (m.rows() != m.cols()) {
    throw ContractViolation("inverse of a non-square matrix");
  }
  const std::size_t n = m.rows();
  std::vector<BitVector> left, right;
  for (std::size_t r = 0; r < n; ++r) {
    left.push_back(m.row(r));
    right.emplace_back(n);
    right.back().set(r);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !left[p].get(c)) ++p;
    if (p == n) return std::nullopt;
    std::swap(left[c], left[p]);
    std::swap(right[c], right[p]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && left[r].get(c)) {
        left[r] ^= left[c];
        right[r] ^= right[c];
      }
    }
  }
  Gf2Matrix inv(m.col_labels(), m.row_labels());
  for (std::size_t r = 0; r < n; ++r) inv.set_row(r, std::move(right[r]));
  return inv;
}

}  // namespace detcap
