#include "cstar/rational.hpp"

#include <unordered_map>
#include <utility>

#include "cstar/errors.hpp"

namespace cstar {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw ArgumentError("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9'))) {
      throw ArgumentError("malformed rational literal: '" + std::string(text) + "'");
    }
  }
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw ArgumentError("malformed rational literal: '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw ArgumentError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ArgumentError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ArgumentError("block out of range");
  QMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void QMatrix::set_block(std::size_t r0, std::size_t c0, const QMatrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) throw ArgumentError("block out of range");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

QMatrix QMatrix::rref(std::vector<std::size_t>* pivots) const {
  QMatrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && m(p, col) == 0) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m(p, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < cols_; ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < cols_; ++c) m(r, c) -= f * m(row, c);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t QMatrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

Rational QMatrix::det() const {
  if (!square()) throw ArgumentError("determinant of a non-square matrix");
  QMatrix m = *this;
  Rational d = 1;
  const std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(col, c));
      d = -d;
    }
    d *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return d;
}

QMatrix QMatrix::inverse() const {
  if (!square()) throw ArgumentError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  QMatrix aug = hstack(*this, identity(n));
  std::vector<std::size_t> piv;
  QMatrix r = aug.rref(&piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw SingularError("matrix is singular", "0");
  return r.block(0, n, n, n);
}

QMatrix QMatrix::adjugate() const {
  if (!square()) throw ArgumentError("adjugate of a non-square matrix");
  const std::size_t n = rows_;
  QMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  QMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // cofactor C_ij goes to adj(j, i)
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = (*this)(r, c);
        }
        ++rr;
      }
      Rational cof = minor.det();
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;
    }
  }
  return adj;
}

QMatrix QMatrix::nullspace() const {
  std::vector<std::size_t> piv;
  QMatrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free.push_back(c);
  QMatrix basis(cols_, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(free[f], f) = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) basis(piv[k], f) = -r(k, free[f]);
  }
  return basis;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool QMatrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool QMatrix::is_skew() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    if ((*this)(r, r) != 0) return false;
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  }
  return true;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ArgumentError("shape mismatch in +");
  QMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ArgumentError("shape mismatch in -");
  QMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

QMatrix operator-(const QMatrix& a) {
  QMatrix s = a;
  for (auto& x : s.data_) x = -x;
  return s;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw ArgumentError("shape mismatch in *");
  QMatrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += x * b(k, c);
    }
  return p;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
  QMatrix p = a;
  for (auto& x : p.data_) x *= s;
  return p;
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw ArgumentError("hstack row mismatch");
  QMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw ArgumentError("vstack column mismatch");
  QMatrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

QMatrix column_span_basis(const QMatrix& a) {
  std::vector<std::size_t> piv;
  QMatrix r = a.transpose().rref(&piv);
  return r.block(0, 0, piv.size(), r.cols()).transpose();
}

bool same_column_span(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) return false;
  return column_span_basis(a) == column_span_basis(b);
}

namespace {

// Expansion along the lowest remaining index, memoized on the index subset.
Rational pfaffian_subset(const QMatrix& a, unsigned mask,
                         std::unordered_map<unsigned, Rational>& memo) {
  if (mask == 0) return 1;
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  unsigned first = 0;
  while (!(mask & (1u << first))) ++first;
  const unsigned rest = mask & ~(1u << first);
  Rational total = 0;
  int position = 0;
  for (unsigned j = first + 1; j < a.rows(); ++j) {
    if (!(rest & (1u << j))) continue;
    ++position;
    if (a(first, j) == 0) continue;
    Rational term = a(first, j) * pfaffian_subset(a, rest & ~(1u << j), memo);
    if (position % 2 == 0) term = -term;
    total += term;
  }
  memo.emplace(mask, total);
  return total;
}

}  // namespace

Rational pfaffian(const QMatrix& a) {
  if (!a.is_skew()) throw ArgumentError("pfaffian of a non-skew matrix");
  if (a.rows() % 2 == 1) return 0;
  if (a.rows() > 24) throw ResourceError("pfaffian limited to size 24");
  std::unordered_map<unsigned, Rational> memo;
  const unsigned full = a.rows() == 0 ? 0u : ((1u << a.rows()) - 1u);
  return pfaffian_subset(a, full, memo);
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational r = 1;
  for (unsigned e = 0; e < exponent; ++e) r *= base;
  return r;
}

}  // namespace cstar
