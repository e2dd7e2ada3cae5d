#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cstar {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  QMatrix transpose() const;
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const QMatrix& m);

  /// Reduced row echelon form; `pivots` receives the pivot column indices.
  QMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  Rational det() const;
  /// Throws SingularError when the determinant vanishes.
  QMatrix inverse() const;
  /// Classical adjugate, computed from cofactors (no division by det).
  QMatrix adjugate() const;
  /// Basis of the right kernel, as columns.
  QMatrix nullspace() const;

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a);
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& s, const QMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Horizontal / vertical concatenation.
QMatrix hstack(const QMatrix& a, const QMatrix& b);
QMatrix vstack(const QMatrix& a, const QMatrix& b);

/// True iff the column spans of `a` and `b` coincide.
bool same_column_span(const QMatrix& a, const QMatrix& b);

/// Canonical basis of the column span: transpose of the nonzero rows of
/// rref(aᵀ).  Two matrices have equal spans iff their canonical bases agree.
QMatrix column_span_basis(const QMatrix& a);

/// Pfaffian of a skew-symmetric matrix of even size (1 for the empty matrix).
Rational pfaffian(const QMatrix& a);

/// Rational power with a nonnegative integer exponent.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace cstar
