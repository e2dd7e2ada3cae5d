#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "cstar/rational.hpp"
#include "json.hpp"

namespace cstar {

/// Octonions by Cayley-Dickson doubling of the quaternions H = <1, i, j, k>:
/// coordinates 0..3 are the first quaternion, 4..7 the second, and
/// (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
class Octonion {
 public:
  Octonion() = default;
  explicit Octonion(std::array<Rational, 8> c) : c_(std::move(c)) {}
  static Octonion real(const Rational& r);

  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }

  Octonion conj() const;
  Rational norm() const;   // sum of squares
  Rational trace() const;  // x + conj(x) = 2 Re x

  friend Octonion operator+(const Octonion& a, const Octonion& b);
  friend Octonion operator-(const Octonion& a, const Octonion& b);
  friend Octonion operator*(const Octonion& a, const Octonion& b);
  friend Octonion operator*(const Rational& s, const Octonion& a);
  friend bool operator==(const Octonion& a, const Octonion& b) = default;

 private:
  std::array<Rational, 8> c_{};
};

/// n x n matrices, x o y = (xy + yx)/2.
struct FullMatrix {
  QMatrix m;
};

/// Symmetric n x n matrices with the same product.
struct SymMatrix {
  QMatrix m;
};

/// Skew-symmetric 2m x 2m matrices, x o y = (x E y + y E x)/2 with E the
/// inverse of the unit J = diag([[0,1],[-1,0]], ...).  Pf(J) = 1.
struct SkewMatrix {
  QMatrix m;
};

/// Spin factor Q + Q^d with q(u, v) = u . v.
struct SpinFactor {
  Rational scalar;
  std::vector<Rational> vec;
};

/// Hermitian 3 x 3 octonion matrix
///   [[ d1,       a3,       conj(a2) ],
///    [ conj(a3), d2,       a1       ],
///    [ a2,       conj(a1), d3       ]].
struct Albert {
  std::array<Rational, 3> diag;
  std::array<Octonion, 3> off;
};

using JordanElement = std::variant<FullMatrix, SymMatrix, SkewMatrix, SpinFactor, Albert>;

std::string kind_name(const JordanElement& x);
/// Throws ArgumentError if the symmetry constraint of the variant fails.
void validate(const JordanElement& x);
bool operator==(const JordanElement& a, const JordanElement& b);

JordanElement unit_like(const JordanElement& x);
JordanElement scale(const Rational& t, const JordanElement& x);
JordanElement add(const JordanElement& x, const JordanElement& y);
JordanElement subtract(const JordanElement& x, const JordanElement& y);

JordanElement jordan_product(const JordanElement& x, const JordanElement& y);

/// Generic norm: det, det, Pfaffian, a^2 - q(u,u), or the cubic norm.
Rational norm(const JordanElement& x);

/// Jordan inverse; throws SingularError when the norm vanishes.
JordanElement jinvert(const JordanElement& x);

/// Polynomial lift of the inversion: adjugate, Pfaffian adjugate, (a, -u),
/// or the cubic adjoint.  Vanishes on the indeterminacy locus.
JordanElement cremona(const JordanElement& x);

/// Exponent e with cremona(cremona(x)) = norm(x)^e * x.
int cremona_norm_power(const JordanElement& x);

/// Dimension of the ambient Jordan algebra.
int algebra_dimension(const JordanElement& x);

/// jinvert(t x) == t^{-1} jinvert(x).
bool equivariance_check(const JordanElement& x, const Rational& t);

/// Cubic adjoint x^# and trace form helpers for the Albert algebra.
Albert albert_adjoint(const Albert& x);
Rational albert_trace(const Albert& x);
Rational albert_quadratic_trace(const Albert& x);

/// {"kind": "full"|"sym"|"skew"|"spin"|"albert", "entries": ...} with
/// rationals written as "p/q" strings.  Matrices are arrays of rows; spin is
/// [a, [u...]]; albert is [[d1,d2,d3], [a1, a2, a3]] with each a_i an
/// 8-array.
nlohmann::json to_json(const JordanElement& x);
JordanElement jordan_from_json(const nlohmann::json& j);

}  // namespace cstar
