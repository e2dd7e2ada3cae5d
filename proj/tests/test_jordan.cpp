#include "cstar/errors.hpp"
#include "cstar/fixedpoints.hpp"
#include "cstar/jordan.hpp"
#include "doctest.h"
#include "random_elements.hpp"

using namespace cstar;

namespace {

struct Variant {
  std::string kind;
  std::size_t size;
};

const std::vector<Variant> kVariants{{"full", 2}, {"full", 3}, {"sym", 3},  {"sym", 4},
                                     {"skew", 4}, {"skew", 6}, {"spin", 5}, {"albert", 0}};

JordanElement square(const JordanElement& x) { return jordan_product(x, x); }

}  // namespace

TEST_CASE("octonions form a normed alternative algebra") {
  sample::Generator g(11);
  for (int t = 0; t < 30; ++t) {
    const Octonion x = g.octonion(), y = g.octonion();
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK(x * (x * y) == (x * x) * y);
    CHECK((y * x) * x == y * (x * x));
    CHECK(x * x.conj() == Octonion::real(x.norm()));
    CHECK((x * y).conj() == y.conj() * x.conj());
  }
  Octonion e1, e2, e4;
  e1[1] = 1;
  e2[2] = 1;
  e4[4] = 1;
  // not associative
  CHECK_FALSE((e1 * e2) * e4 == e1 * (e2 * e4));
}

TEST_CASE("unit acts as identity") {
  sample::Generator g(1);
  for (const auto& v : kVariants) {
    const auto x = g.element(v.kind, v.size);
    CHECK(jordan_product(unit_like(x), x) == x);
    CHECK(norm(unit_like(x)) == 1);
  }
}

TEST_CASE("full matrices: e11 o e12 = e12 / 2") {
  QMatrix e11(2, 2), e12(2, 2);
  e11(0, 0) = 1;
  e12(0, 1) = 1;
  CHECK(jordan_product(FullMatrix{e11}, FullMatrix{e12}) == JordanElement{FullMatrix{Rational(1, 2) * e12}});
}

TEST_CASE("Jordan identity and commutativity on random pairs") {
  sample::Generator g(2);
  for (const auto& v : kVariants) {
    CAPTURE(v.kind);
    for (int t = 0; t < 50; ++t) {
      const auto x = g.element(v.kind, v.size), y = g.element(v.kind, v.size);
      CHECK(jordan_product(x, y) == jordan_product(y, x));
      const auto x2 = square(x);
      CHECK(jordan_product(x2, jordan_product(x, y)) == jordan_product(x, jordan_product(x2, y)));
    }
  }
}

TEST_CASE("inverse axioms") {
  sample::Generator g(3);
  for (const auto& v : kVariants) {
    CAPTURE(v.kind);
    for (int t = 0; t < 50; ++t) {
      const auto x = g.invertible(v.kind, v.size);
      const auto xi = jinvert(x);
      CHECK(jinvert(xi) == x);
      CHECK(jordan_product(x, xi) == unit_like(x));
      CHECK(jordan_product(square(x), xi) == x);
    }
  }
}

TEST_CASE("inverse examples") {
  for (const auto& v : kVariants) {
    sample::Generator g(4);
    const auto e = unit_like(g.element(v.kind, v.size));
    CHECK(jinvert(e) == e);
  }
  Albert d;
  d.diag = {2, Rational(-1, 3), 5};
  Albert di;
  di.diag = {Rational(1, 2), -3, Rational(1, 5)};
  CHECK(jinvert(d) == JordanElement{di});
  CHECK(jinvert(FullMatrix{QMatrix{{1, 1}, {0, 1}}}) == JordanElement{FullMatrix{QMatrix{{1, -1}, {0, 1}}}});
}

TEST_CASE("singular elements report the vanishing norm") {
  try {
    jinvert(FullMatrix{QMatrix{{1, 2}, {2, 4}}});
    FAIL("expected SingularError");
  } catch (const SingularError& e) {
    CHECK(e.norm() == "0");
  }
  CHECK_THROWS_AS(jinvert(SpinFactor{1, {1, 0}}), SingularError);
  CHECK_THROWS_AS(jordan_product(FullMatrix{QMatrix::identity(2)}, SymMatrix{QMatrix::identity(2)}),
                  ArgumentError);
}

TEST_CASE("Cremona examples") {
  CHECK(cremona(FullMatrix{QMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 4}}}) ==
        JordanElement{FullMatrix{QMatrix{{8, 0, 0}, {0, 4, 0}, {0, 0, 2}}}});
  const auto rank_one = FullMatrix{QMatrix{{1, 2, 3}, {2, 4, 6}, {-1, -2, -3}}};
  CHECK(std::get<FullMatrix>(cremona(rank_one)).m.is_zero());
  // generic 4x4 skew: cremona equals Pf(A) times the Jordan inverse
  const SkewMatrix a{QMatrix{{0, 1, 2, 3}, {-1, 0, 4, 5}, {-2, -4, 0, 6}, {-3, -5, -6, 0}}};
  CHECK(norm(a) == 8);
  CHECK(cremona(a) == scale(8, jinvert(a)));
}

TEST_CASE("adjugate coherence and Cremona squared") {
  sample::Generator g(5);
  for (const auto& v : kVariants) {
    CAPTURE(v.kind);
    CAPTURE(v.size);
    for (int t = 0; t < 50; ++t) {
      const auto x = g.invertible(v.kind, v.size);
      const Rational n = norm(x);
      CHECK(cremona(x) == scale(n, jinvert(x)));
      const int e = cremona_norm_power(x);
      const Rational factor = e >= 0 ? pow(n, e) : 1 / pow(n, -e);
      CHECK(cremona(cremona(x)) == scale(factor, x));
    }
  }
}

TEST_CASE("Albert algebra: adjoint and norm identities") {
  sample::Generator g(6);
  for (int t = 0; t < 30; ++t) {
    const Albert x = std::get<Albert>(g.element("albert", 0));
    const JordanElement X = x;
    const JordanElement sharp = albert_adjoint(x);
    // x^# = x^2 - T(x) x + S(x) 1
    const auto expected = add(subtract(square(X), scale(albert_trace(x), X)), scale(albert_quadratic_trace(x), unit_like(X)));
    CHECK(sharp == expected);
    CHECK(jordan_product(X, sharp) == scale(norm(X), unit_like(X)));
    CHECK(cremona(sharp) == scale(norm(X), X));
  }
}

TEST_CASE("homogeneity of the inversion") {
  sample::Generator g(7);
  for (const auto& v : kVariants) {
    const auto x = g.invertible(v.kind, v.size);
    CHECK(equivariance_check(x, 1));
    CHECK(equivariance_check(x, Rational(5, 7)));
    CHECK(equivariance_check(x, -2));
  }
  CHECK_THROWS_AS(equivariance_check(unit_like(FullMatrix{QMatrix::identity(2)}), 0), ArgumentError);
}

TEST_CASE("algebra dimension equals the normal rank at the isolated sink") {
  for (int n = 2; n <= 4; ++n) {
    const auto a = build_root_datum(DynkinType(Family::A, 2 * n - 1));
    CHECK(algebra_dimension(FullMatrix{QMatrix(n, n)}) == enumerate_components(a, n, n).sink().nu_minus);
    const auto c = build_root_datum(DynkinType(Family::C, n));
    CHECK(algebra_dimension(SymMatrix{QMatrix(n, n)}) == enumerate_components(c, n, n).sink().nu_minus);
  }
  for (int n : {4, 6}) {
    const auto d = build_root_datum(DynkinType(Family::D, n));
    CHECK(algebra_dimension(SkewMatrix{QMatrix(n, n)}) == enumerate_components(d, n, n).sink().nu_minus);
  }
  for (int n = 3; n <= 5; ++n) {
    const auto b = build_root_datum(DynkinType(Family::B, n));
    CHECK(algebra_dimension(SpinFactor{0, std::vector<Rational>(2 * n - 2)}) ==
          enumerate_components(b, 1, 1).sink().nu_minus);
    const auto d = build_root_datum(DynkinType(Family::D, n + 1));
    CHECK(algebra_dimension(SpinFactor{0, std::vector<Rational>(2 * n - 1)}) ==
          enumerate_components(d, 1, 1).sink().nu_minus);
  }
  CHECK(algebra_dimension(Albert{}) ==
        enumerate_components(build_root_datum(DynkinType(Family::E, 7)), 7, 7).sink().nu_minus);
}

TEST_CASE("json round trip") {
  sample::Generator g(8);
  for (const auto& v : kVariants) {
    const auto x = g.element(v.kind, v.size);
    const auto j = to_json(x);
    CHECK(j["kind"] == v.kind);
    CHECK(jordan_from_json(nlohmann::json::parse(j.dump())) == x);
  }
  CHECK_THROWS_AS(jordan_from_json(nlohmann::json::parse(R"({"kind":"sym","entries":[["1","2"],["3","4"]]})")),
                  ArgumentError);
  CHECK_THROWS_AS(jordan_from_json(nlohmann::json::parse(R"({"kind":"skew","entries":[["0"]]})")), ArgumentError);
  CHECK_THROWS_AS(jordan_from_json(nlohmann::json::parse(R"({"kind":"quux","entries":[]})")), ArgumentError);
}
