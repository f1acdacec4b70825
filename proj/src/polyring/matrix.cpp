#include "rescalc/polyring.hpp"

#include <map>

namespace rescalc {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::identity(const RingPtr& ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial(ring, Rational(1));
  return m;
}

PolyMatrix PolyMatrix::from_rows(const RingPtr& ring,
                                 const std::vector<std::vector<Polynomial>>& rows,
                                 std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  PolyMatrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw AlgebraError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

PolyMatrix PolyMatrix::from_columns(const RingPtr& ring, std::size_t rows,
                                    const std::vector<PolyVector>& cols) {
  PolyMatrix m(ring, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw AlgebraError("column rank mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

PolyVector PolyMatrix::column(std::size_t c) const {
  PolyVector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

PolyVector PolyMatrix::row(std::size_t r) const {
  PolyVector v;
  v.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.push_back((*this)(r, c));
  return v;
}

std::vector<PolyVector> PolyMatrix::columns() const {
  std::vector<PolyVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) throw AlgebraError("matrix shape mismatch in product");
  PolyMatrix out(ring_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Polynomial& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Polynomial& b = other(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw AlgebraError("matrix shape mismatch");
  PolyMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw AlgebraError("matrix shape mismatch");
  PolyMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

PolyVector PolyMatrix::operator*(const PolyVector& v) const {
  if (v.size() != cols_) throw AlgebraError("matrix-vector shape mismatch");
  PolyVector out = zero_vector(ring_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!(*this)(i, k).is_zero() && !v[k].is_zero()) out[i] += (*this)(i, k) * v[k];
  return out;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& p) const {
  PolyMatrix out(*this);
  for (auto& e : out.data_) e = e * p;
  return out;
}

PolyMatrix PolyMatrix::without_row(std::size_t r) const {
  PolyMatrix out(ring_, rows_ - 1, cols_);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0; j < cols_; ++j) out(oi, j) = (*this)(i, j);
    ++oi;
  }
  return out;
}

PolyMatrix PolyMatrix::without_column(std::size_t c) const {
  PolyMatrix out(ring_, rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == c) continue;
      out(i, oj++) = (*this)(i, j);
    }
  return out;
}

PolyMatrix PolyMatrix::map_to(const RingPtr& target) const {
  PolyMatrix out(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].map_to(target);
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string PolyMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += ", ";
    s += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += (*this)(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

namespace {

// det of rows [row, n) against the column set `mask`, which has n-row bits.
Polynomial det_rec(const PolyMatrix& m, std::size_t row, unsigned long mask,
                   std::map<std::pair<std::size_t, unsigned long>, Polynomial>& memo) {
  if (row == m.rows()) return Polynomial(m.ring(), Rational(1));
  auto key = std::make_pair(row, mask);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Polynomial acc(m.ring());
  int sign = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!(mask & (1ul << c))) continue;
    const Polynomial& e = m(row, c);
    if (!e.is_zero()) {
      Polynomial sub = det_rec(m, row + 1, mask & ~(1ul << c), memo);
      if (!sub.is_zero()) acc = sign > 0 ? acc + e * sub : acc - e * sub;
    }
    sign = -sign;
  }
  memo.emplace(key, acc);
  return acc;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw AlgebraError("determinant of a non-square matrix");
  if (m.rows() > 8 * sizeof(unsigned long) - 1) throw AlgebraError("matrix too large");
  std::map<std::pair<std::size_t, unsigned long>, Polynomial> memo;
  unsigned long full = m.cols() == 0 ? 0ul : ((1ul << m.cols()) - 1ul);
  return det_rec(m, 0, full, memo);
}

}  // namespace rescalc
