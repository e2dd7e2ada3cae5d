#include "cstar/jordan.hpp"
#include "cstar/json_io.hpp"

#include <type_traits>

#include "cstar/errors.hpp"

namespace cstar {

namespace {

using Quaternion = std::array<Rational, 4>;

Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quaternion qconj(const Quaternion& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Quaternion qadd(const Quaternion& a, const Quaternion& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Quaternion qsub(const Quaternion& a, const Quaternion& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

QMatrix standard_unit_skew(std::size_t n) {
  QMatrix j(n, n);
  for (std::size_t b = 0; b + 1 < n; b += 2) {
    j(b, b + 1) = 1;
    j(b + 1, b) = -1;
  }
  return j;
}

QMatrix symmetrized(const QMatrix& x, const QMatrix& y) {
  return Rational(1, 2) * (x * y + y * x);
}

void require_square(const QMatrix& m, const char* what) {
  if (!m.square() || m.rows() == 0) throw ArgumentError(std::string(what) + " must be a nonempty square matrix");
}

// Pfaffian adjugate: Pf(A) A^{-1}, entrywise (-1)^{i+j} Pf(A minus rows/cols i, j) for i < j
// in 1-based indices, extended skew-symmetrically.
QMatrix pfaffian_adjugate(const QMatrix& a) {
  const std::size_t n = a.rows();
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      QMatrix minor(n - 2, n - 2);
      std::size_t r = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (x == i || x == j) continue;
        std::size_t c = 0;
        for (std::size_t y = 0; y < n; ++y) {
          if (y == i || y == j) continue;
          minor(r, c++) = a(x, y);
        }
        ++r;
      }
      Rational p = pfaffian(minor);
      if ((i + j) % 2 == 1) p = -p;
      out(i, j) = p;
      out(j, i) = -p;
    }
  }
  return out;
}

using OctMatrix = std::array<std::array<Octonion, 3>, 3>;

OctMatrix to_matrix(const Albert& x) {
  OctMatrix m;
  for (int a = 0; a < 3; ++a) m[a][a] = Octonion::real(x.diag[a]);
  m[0][1] = x.off[2];
  m[1][0] = x.off[2].conj();
  m[1][2] = x.off[0];
  m[2][1] = x.off[0].conj();
  m[2][0] = x.off[1];
  m[0][2] = x.off[1].conj();
  return m;
}

Albert from_matrix(const OctMatrix& m) {
  Albert x;
  for (int a = 0; a < 3; ++a) {
    for (std::size_t c = 1; c < 8; ++c)
      if (m[a][a][c] != 0) throw std::logic_error("Albert product left the Hermitian matrices");
    x.diag[a] = m[a][a][0];
  }
  x.off[2] = m[0][1];
  x.off[0] = m[1][2];
  x.off[1] = m[2][0];
  if (!(m[1][0] == x.off[2].conj() && m[2][1] == x.off[0].conj() && m[0][2] == x.off[1].conj()))
    throw std::logic_error("Albert product left the Hermitian matrices");
  return x;
}

OctMatrix multiply(const OctMatrix& a, const OctMatrix& b) {
  OctMatrix out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int k = 0; k < 3; ++k) out[r][c] = out[r][c] + a[r][k] * b[k][c];
  return out;
}

Albert albert_product(const Albert& x, const Albert& y) {
  const OctMatrix mx = to_matrix(x), my = to_matrix(y);
  const OctMatrix p = multiply(mx, my), q = multiply(my, mx);
  OctMatrix s;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) s[r][c] = Rational(1, 2) * (p[r][c] + q[r][c]);
  return from_matrix(s);
}

Rational albert_norm(const Albert& x) {
  const auto& d = x.diag;
  const auto& a = x.off;
  return d[0] * d[1] * d[2] - d[0] * a[0].norm() - d[1] * a[1].norm() - d[2] * a[2].norm() +
         ((a[0] * a[1]) * a[2]).trace();
}

Albert albert_scale(const Rational& t, const Albert& x) {
  Albert y;
  for (int a = 0; a < 3; ++a) {
    y.diag[a] = t * x.diag[a];
    y.off[a] = t * x.off[a];
  }
  return y;
}

template <class T>
const T& same_kind(const JordanElement& y, const char* op) {
  if (!std::holds_alternative<T>(y)) throw ArgumentError(std::string(op) + ": Jordan elements of different kinds");
  return std::get<T>(y);
}

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ArgumentError(std::string(op) + ": matrix sizes differ");
}

[[noreturn]] void singular(const JordanElement& x, const Rational& n) {
  throw SingularError(kind_name(x) + " element is not invertible (norm " + to_string(n) + ")", to_string(n));
}

}  // namespace

Octonion Octonion::real(const Rational& r) {
  Octonion o;
  o.c_[0] = r;
  return o;
}

Octonion Octonion::conj() const {
  Octonion o = *this;
  for (std::size_t i = 1; i < 8; ++i) o.c_[i] = -o.c_[i];
  return o;
}

Rational Octonion::norm() const {
  Rational s = 0;
  for (const auto& v : c_) s += v * v;
  return s;
}

Rational Octonion::trace() const { return 2 * c_[0]; }

Octonion operator+(const Octonion& a, const Octonion& b) {
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) o.c_[i] = a.c_[i] + b.c_[i];
  return o;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) o.c_[i] = a.c_[i] - b.c_[i];
  return o;
}

Octonion operator*(const Rational& s, const Octonion& a) {
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) o.c_[i] = s * a.c_[i];
  return o;
}

Octonion operator*(const Octonion& x, const Octonion& y) {
  const Quaternion a{x.c_[0], x.c_[1], x.c_[2], x.c_[3]}, b{x.c_[4], x.c_[5], x.c_[6], x.c_[7]};
  const Quaternion c{y.c_[0], y.c_[1], y.c_[2], y.c_[3]}, d{y.c_[4], y.c_[5], y.c_[6], y.c_[7]};
  const Quaternion lo = qsub(qmul(a, c), qmul(qconj(d), b));
  const Quaternion hi = qadd(qmul(d, a), qmul(b, qconj(c)));
  Octonion o;
  for (std::size_t i = 0; i < 4; ++i) {
    o.c_[i] = lo[i];
    o.c_[i + 4] = hi[i];
  }
  return o;
}

std::string kind_name(const JordanElement& x) {
  static const char* names[] = {"full", "sym", "skew", "spin", "albert"};
  return names[x.index()];
}

void validate(const JordanElement& x) {
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FullMatrix>) {
          require_square(v.m, "full matrix");
        } else if constexpr (std::is_same_v<T, SymMatrix>) {
          require_square(v.m, "symmetric matrix");
          if (!v.m.is_symmetric()) throw ArgumentError("matrix is not symmetric");
        } else if constexpr (std::is_same_v<T, SkewMatrix>) {
          require_square(v.m, "skew matrix");
          if (v.m.rows() % 2 != 0) throw ArgumentError("skew matrix must have even size");
          if (!v.m.is_skew()) throw ArgumentError("matrix is not skew-symmetric");
        } else if constexpr (std::is_same_v<T, SpinFactor>) {
          if (v.vec.empty()) throw ArgumentError("spin factor needs a nonempty vector part");
        }
      },
      x);
}

bool operator==(const JordanElement& a, const JordanElement& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        const T& w = std::get<T>(b);
        if constexpr (std::is_same_v<T, SpinFactor>) {
          return v.scalar == w.scalar && v.vec == w.vec;
        } else if constexpr (std::is_same_v<T, Albert>) {
          return v.diag == w.diag && v.off == w.off;
        } else {
          return v.m == w.m;
        }
      },
      a);
}

JordanElement unit_like(const JordanElement& x) {
  return std::visit(
      [](const auto& v) -> JordanElement {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FullMatrix> || std::is_same_v<T, SymMatrix>) {
          return T{QMatrix::identity(v.m.rows())};
        } else if constexpr (std::is_same_v<T, SkewMatrix>) {
          return SkewMatrix{standard_unit_skew(v.m.rows())};
        } else if constexpr (std::is_same_v<T, SpinFactor>) {
          return SpinFactor{1, std::vector<Rational>(v.vec.size(), 0)};
        } else {
          Albert e;
          e.diag = {1, 1, 1};
          return e;
        }
      },
      x);
}

JordanElement scale(const Rational& t, const JordanElement& x) {
  return std::visit(
      [&](const auto& v) -> JordanElement {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SpinFactor>) {
          SpinFactor s{t * v.scalar, v.vec};
          for (auto& c : s.vec) c *= t;
          return s;
        } else if constexpr (std::is_same_v<T, Albert>) {
          return albert_scale(t, v);
        } else {
          return T{t * v.m};
        }
      },
      x);
}

JordanElement add(const JordanElement& x, const JordanElement& y) {
  return std::visit(
      [&](const auto& v) -> JordanElement {
        using T = std::decay_t<decltype(v)>;
        const T& w = same_kind<T>(y, "add");
        if constexpr (std::is_same_v<T, SpinFactor>) {
          if (v.vec.size() != w.vec.size()) throw ArgumentError("add: spin factors of different dimension");
          SpinFactor s{v.scalar + w.scalar, v.vec};
          for (std::size_t i = 0; i < s.vec.size(); ++i) s.vec[i] += w.vec[i];
          return s;
        } else if constexpr (std::is_same_v<T, Albert>) {
          Albert s;
          for (int a = 0; a < 3; ++a) {
            s.diag[a] = v.diag[a] + w.diag[a];
            s.off[a] = v.off[a] + w.off[a];
          }
          return s;
        } else {
          require_same_shape(v.m, w.m, "add");
          return T{v.m + w.m};
        }
      },
      x);
}

JordanElement subtract(const JordanElement& x, const JordanElement& y) { return add(x, scale(-1, y)); }

JordanElement jordan_product(const JordanElement& x, const JordanElement& y) {
  return std::visit(
      [&](const auto& v) -> JordanElement {
        using T = std::decay_t<decltype(v)>;
        const T& w = same_kind<T>(y, "jordan_product");
        if constexpr (std::is_same_v<T, FullMatrix> || std::is_same_v<T, SymMatrix>) {
          require_same_shape(v.m, w.m, "jordan_product");
          return T{symmetrized(v.m, w.m)};
        } else if constexpr (std::is_same_v<T, SkewMatrix>) {
          require_same_shape(v.m, w.m, "jordan_product");
          const QMatrix e = -standard_unit_skew(v.m.rows());
          return SkewMatrix{Rational(1, 2) * (v.m * e * w.m + w.m * e * v.m)};
        } else if constexpr (std::is_same_v<T, SpinFactor>) {
          if (v.vec.size() != w.vec.size()) throw ArgumentError("jordan_product: spin factors of different dimension");
          SpinFactor s{v.scalar * w.scalar, std::vector<Rational>(v.vec.size())};
          for (std::size_t i = 0; i < v.vec.size(); ++i) {
            s.scalar += v.vec[i] * w.vec[i];
            s.vec[i] = v.scalar * w.vec[i] + w.scalar * v.vec[i];
          }
          return s;
        } else {
          return albert_product(v, w);
        }
      },
      x);
}

Rational norm(const JordanElement& x) {
  validate(x);
  return std::visit(
      [](const auto& v) -> Rational {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FullMatrix> || std::is_same_v<T, SymMatrix>) {
          return v.m.det();
        } else if constexpr (std::is_same_v<T, SkewMatrix>) {
          return pfaffian(v.m);
        } else if constexpr (std::is_same_v<T, SpinFactor>) {
          Rational n = v.scalar * v.scalar;
          for (const auto& c : v.vec) n -= c * c;
          return n;
        } else {
          return albert_norm(v);
        }
      },
      x);
}

JordanElement jinvert(const JordanElement& x) {
  const Rational n = norm(x);
  if (n == 0) singular(x, n);
  return std::visit(
      [&](const auto& v) -> JordanElement {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FullMatrix> || std::is_same_v<T, SymMatrix>) {
          return T{v.m.inverse()};
        } else if constexpr (std::is_same_v<T, SkewMatrix>) {
          const QMatrix j = standard_unit_skew(v.m.rows());
          return SkewMatrix{j * v.m.inverse() * j};
        } else if constexpr (std::is_same_v<T, SpinFactor>) {
          SpinFactor s{v.scalar / n, v.vec};
          for (auto& c : s.vec) c = -c / n;
          return s;
        } else {
          return albert_scale(1 / n, albert_adjoint(v));
        }
      },
      x);
}

JordanElement cremona(const JordanElement& x) {
  validate(x);
  return std::visit(
      [](const auto& v) -> JordanElement {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FullMatrix> || std::is_same_v<T, SymMatrix>) {
          return T{v.m.adjugate()};
        } else if constexpr (std::is_same_v<T, SkewMatrix>) {
          const QMatrix j = standard_unit_skew(v.m.rows());
          return SkewMatrix{j * pfaffian_adjugate(v.m) * j};
        } else if constexpr (std::is_same_v<T, SpinFactor>) {
          SpinFactor s = v;
          for (auto& c : s.vec) c = -c;
          return s;
        } else {
          return albert_adjoint(v);
        }
      },
      x);
}

int cremona_norm_power(const JordanElement& x) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FullMatrix> || std::is_same_v<T, SymMatrix>) {
          return static_cast<int>(v.m.rows()) - 2;
        } else if constexpr (std::is_same_v<T, SkewMatrix>) {
          return static_cast<int>(v.m.rows() / 2) - 2;
        } else if constexpr (std::is_same_v<T, SpinFactor>) {
          return 0;
        } else {
          return 1;
        }
      },
      x);
}

int algebra_dimension(const JordanElement& x) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FullMatrix>) {
          return static_cast<int>(v.m.rows() * v.m.rows());
        } else if constexpr (std::is_same_v<T, SymMatrix>) {
          return static_cast<int>(v.m.rows() * (v.m.rows() + 1) / 2);
        } else if constexpr (std::is_same_v<T, SkewMatrix>) {
          return static_cast<int>(v.m.rows() * (v.m.rows() - 1) / 2);
        } else if constexpr (std::is_same_v<T, SpinFactor>) {
          return static_cast<int>(v.vec.size()) + 1;
        } else {
          return 27;
        }
      },
      x);
}

bool equivariance_check(const JordanElement& x, const Rational& t) {
  if (t == 0) throw ArgumentError("equivariance_check needs a nonzero scalar");
  return jinvert(scale(t, x)) == scale(1 / t, jinvert(x));
}

Albert albert_adjoint(const Albert& x) {
  const auto& d = x.diag;
  const auto& a = x.off;
  Albert s;
  s.diag = {d[1] * d[2] - a[0].norm(), d[2] * d[0] - a[1].norm(), d[0] * d[1] - a[2].norm()};
  s.off[0] = (a[1] * a[2]).conj() - d[0] * a[0];
  s.off[1] = (a[2] * a[0]).conj() - d[1] * a[1];
  s.off[2] = (a[0] * a[1]).conj() - d[2] * a[2];
  return s;
}

Rational albert_trace(const Albert& x) { return x.diag[0] + x.diag[1] + x.diag[2]; }

Rational albert_quadratic_trace(const Albert& x) {
  const auto& d = x.diag;
  return d[0] * d[1] + d[1] * d[2] + d[2] * d[0] - x.off[0].norm() - x.off[1].norm() - x.off[2].norm();
}

namespace {

nlohmann::json rat(const Rational& q) { return rational_to_json(q); }

Rational parse_entry(const nlohmann::json& j) { return rational_from_json(j); }

nlohmann::json octonion_json(const Octonion& o) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < 8; ++i) a.push_back(rat(o[i]));
  return a;
}

Octonion octonion_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 8) throw ArgumentError("octonion must have 8 coordinates");
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) o[i] = parse_entry(j[i]);
  return o;
}

}  // namespace

nlohmann::json to_json(const JordanElement& x) {
  nlohmann::json j;
  j["kind"] = kind_name(x);
  j["entries"] = std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SpinFactor>) {
          nlohmann::json u = nlohmann::json::array();
          for (const auto& c : v.vec) u.push_back(rat(c));
          return nlohmann::json::array({rat(v.scalar), u});
        } else if constexpr (std::is_same_v<T, Albert>) {
          return nlohmann::json::array(
              {nlohmann::json::array({rat(v.diag[0]), rat(v.diag[1]), rat(v.diag[2])}),
               nlohmann::json::array({octonion_json(v.off[0]), octonion_json(v.off[1]), octonion_json(v.off[2])})});
        } else {
          return matrix_to_json(v.m);
        }
      },
      x);
  return j;
}

JordanElement jordan_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("entries"))
    throw ArgumentError("Jordan element must be an object with \"kind\" and \"entries\"");
  const std::string kind = j["kind"].get<std::string>();
  const auto& e = j["entries"];
  JordanElement x;
  if (kind == "full") {
    x = FullMatrix{matrix_from_json(e)};
  } else if (kind == "sym") {
    x = SymMatrix{matrix_from_json(e)};
  } else if (kind == "skew") {
    x = SkewMatrix{matrix_from_json(e)};
  } else if (kind == "spin") {
    if (!e.is_array() || e.size() != 2 || !e[1].is_array()) throw ArgumentError("spin entries are [a, [u...]]");
    SpinFactor s{parse_entry(e[0]), {}};
    for (const auto& c : e[1]) s.vec.push_back(parse_entry(c));
    x = s;
  } else if (kind == "albert") {
    if (!e.is_array() || e.size() != 2 || e[0].size() != 3 || e[1].size() != 3)
      throw ArgumentError("albert entries are [[d1,d2,d3], [a1,a2,a3]]");
    Albert a;
    for (std::size_t i = 0; i < 3; ++i) {
      a.diag[i] = parse_entry(e[0][i]);
      a.off[i] = octonion_from_json(e[1][i]);
    }
    x = a;
  } else {
    throw ArgumentError("unknown Jordan kind '" + kind + "'");
  }
  validate(x);
  return x;
}

}  // namespace cstar
