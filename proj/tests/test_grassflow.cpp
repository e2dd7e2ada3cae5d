#include <algorithm>
#include <set>
#include <tuple>

#include "cstar/errors.hpp"
#include "cstar/fixedpoints.hpp"
#include "cstar/grassflow.hpp"
#include "doctest.h"
#include "grass_oracle.hpp"

using namespace cstar;

namespace {

struct Case {
  Model model;
  int n;
};

const std::vector<Case> kCases{{Model::A, 2}, {Model::A, 3}, {Model::B, 2}, {Model::B, 3}, {Model::C, 2},
                               {Model::C, 3}, {Model::D, 3}, {Model::D, 4}, {Model::Dq, 3}, {Model::Dq, 4}};

int max_k(const FlowSpec& f) { return f.model == Model::A ? f.ambient_dim() - 1 : f.n; }

bool is_isotropic(const GrassPoint& p) {
  if (p.form == FormTag::None) return true;
  return (p.basis.transpose() * form_matrix(p.form, p.ambient_dim) * p.basis).is_zero();
}

QMatrix col(std::initializer_list<Rational> v) {
  QMatrix m(v.size(), 1);
  std::size_t r = 0;
  for (const auto& x : v) m(r++, 0) = x;
  return m;
}

}  // namespace

TEST_CASE("model constants") {
  const auto a = flow_spec(Model::A, 2);
  CHECK(a.weights == std::vector<int>{1, 1, 0, 0});
  const auto b = flow_spec(Model::B, 3);
  CHECK(b.weights == std::vector<int>{1, 0, 0, -1, 0, 0, 0});
  CHECK(b.blocks()[1].size() == 5);
  CHECK(form_matrix(FormTag::Symmetric, 5) ==
        QMatrix{{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}});
  CHECK(form_matrix(FormTag::Skew, 2) == QMatrix{{0, 1}, {-1, 0}});
  CHECK(parse_model("dq") == Model::Dq);
  CHECK_THROWS_AS(parse_model("E"), ArgumentError);
  CHECK_THROWS_AS(form_matrix(FormTag::Skew, 3), ArgumentError);
}

TEST_CASE("point validation") {
  CHECK_THROWS_AS(make_point(QMatrix{{1, 2}, {2, 4}, {0, 0}}, FormTag::None), PreconditionError);
  CHECK_THROWS_AS(make_point(QMatrix{{1, 0}, {0, 1}, {1, 0}, {0, 1}}, FormTag::Symmetric), PreconditionError);
  CHECK_THROWS_AS(make_point(QMatrix(2, 3), FormTag::None), ArgumentError);
  const auto p = make_point(QMatrix{{1}, {0}, {1}, {0}}, FormTag::Skew);
  CHECK_THROWS_AS(flow_limit(p, flow_spec(Model::D, 2), Direction::Zero), ArgumentError);
  CHECK_THROWS_AS(flow_limit(p, flow_spec(Model::C, 3), Direction::Zero), ArgumentError);
}

TEST_CASE("limits of the A_3(2) example") {
  const auto f = flow_spec(Model::A, 2);
  const auto p = make_point(QMatrix{{1, 0}, {0, 1}, {1, 0}, {1, 1}}, FormTag::None);
  CHECK(same_point(flow_limit(p, f, Direction::Zero),
                   make_point(QMatrix{{1, 0}, {0, 1}, {0, 0}, {0, 0}}, FormTag::None)));
  CHECK(same_point(flow_limit(p, f, Direction::Infinity),
                   make_point(QMatrix{{0, 0}, {0, 0}, {1, 0}, {0, 1}}, FormTag::None)));
  const auto fixed = make_point(QMatrix{{1, 0}, {2, 0}, {0, 1}, {0, 3}}, FormTag::None);
  CHECK(is_fixed(fixed, f));
  CHECK(same_point(flow_limit(fixed, f, Direction::Zero), fixed));
  CHECK(same_point(flow_limit(fixed, f, Direction::Infinity), fixed));
}

TEST_CASE("limits agree with the extremal Plucker coordinates") {
  oracle::PointSampler s(21);
  for (const auto& c : kCases) {
    const auto f = flow_spec(c.model, c.n);
    for (int k = 1; k <= max_k(f); ++k)
      for (int trial = 0; trial < 6; ++trial) {
        CAPTURE(model_name(c.model));
        CAPTURE(c.n);
        CAPTURE(k);
        const auto p = s.point(f, k);
        for (auto d : {Direction::Zero, Direction::Infinity}) {
          const auto lim = flow_limit(p, f, d);
          CHECK(oracle::proportional(oracle::plucker(lim.basis),
                                     oracle::plucker_limit(p.basis, f.weights, d == Direction::Zero)));
          CHECK(is_fixed(lim, f));
          CHECK(is_isotropic(lim));
          CHECK(same_point(act(lim, f, 3), lim));
          CHECK(same_point(act(lim, f, Rational(-2, 5)), lim));
          CHECK(same_point(flow_limit(lim, f, d), lim));
        }
      }
  }
}

TEST_CASE("the flow preserves the form and moves generic points") {
  oracle::PointSampler s(22);
  for (const auto& c : kCases) {
    const auto f = flow_spec(c.model, c.n);
    const auto p = s.point(f, 1);
    const auto q = act(p, f, Rational(7, 3));
    CHECK(is_isotropic(q));
    CHECK(same_point(act(q, f, Rational(3, 7)), p));
  }
}

TEST_CASE("component membership examples") {
  const auto a = flow_spec(Model::A, 3);
  const auto sink = component_membership(coordinate_fixed_points(a, 2).back(), a);
  CHECK(sink.profile == std::array<int, 3>{2, 0, 0});
  CHECK(sink.sink);
  CHECK(sink.mu == 0);

  const auto b = flow_spec(Model::B, 3);
  const auto p = make_point(hstack(col({1, 0, 0, 0, 0, 0, 0}), col({0, 1, 2, 0, 0, 0, 0})), FormTag::Symmetric);
  const auto d = component_membership(p, b);
  CHECK(d.profile == std::array<int, 3>{1, 1, 0});
  CHECK(d.mu == 0);
  CHECK(d.dim == 3);
  CHECK(d.ambient == DynkinType(Family::B, 3));
  CHECK(d.variety_node == 2);

  const auto cm = flow_spec(Model::C, 2);
  const auto line = make_point(col({1, 0, 1, 0}), FormTag::Skew);
  CHECK_FALSE(is_fixed(line, cm));
  CHECK_THROWS_AS(component_membership(line, cm), PreconditionError);
  CHECK(same_point(flow_limit(line, cm, Direction::Zero), make_point(col({1, 0, 0, 0}), FormTag::Skew)));
  CHECK(same_point(flow_limit(line, cm, Direction::Infinity), make_point(col({0, 0, 1, 0}), FormTag::Skew)));
}

TEST_CASE("fixed components match the root-theoretic enumeration") {
  struct Run {
    Model model;
    int n;
  };
  const std::vector<Run> runs{{Model::A, 2}, {Model::A, 3}, {Model::A, 4}, {Model::B, 2}, {Model::B, 3},
                              {Model::B, 4}, {Model::B, 5}, {Model::C, 2}, {Model::C, 3}, {Model::C, 4},
                              {Model::C, 5}, {Model::D, 4}, {Model::D, 5}, {Model::Dq, 4}, {Model::Dq, 5}};
  int compared = 0;
  for (const auto& r : runs) {
    const auto f = flow_spec(r.model, r.n);
    for (int k = 1; k <= max_k(f); ++k) {
      std::map<int, std::vector<std::pair<int, int>>> by_node;  // variety node -> (mu, dim)
      std::optional<DynkinType> ambient;
      int grading = 0;
      for (const auto& q : coordinate_fixed_points(f, k)) {
        const auto d = component_membership(q, f);
        if (!d.ambient) continue;
        ambient = d.ambient;
        grading = d.grading_node;
        by_node[d.variety_node].push_back({d.mu, d.dim});
      }
      for (auto& [node, model_side] : by_node) {
        CAPTURE(model_name(r.model));
        CAPTURE(r.n);
        CAPTURE(k);
        CAPTURE(node);
        const auto report = enumerate_components(build_root_datum(*ambient), grading, node);
        std::vector<std::pair<int, int>> roots_side;
        for (const auto& comp : report.components) roots_side.push_back({comp.mu, comp.dim});
        std::sort(model_side.begin(), model_side.end());
        std::sort(roots_side.begin(), roots_side.end());
        CHECK(model_side == roots_side);
        ++compared;
      }
    }
  }
  CHECK(compared > 40);
}

TEST_CASE("chart inversion examples") {
  const auto r = chart_inverse_check(QMatrix{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}, Model::A, 3);
  CHECK(r.ok);
  CHECK(r.source_coordinate == QMatrix{{1, -1, 1}, {0, 1, -1}, {0, 0, 1}});
  const auto c = chart_inverse_check(QMatrix{{2, 1}, {1, 1}}, Model::C, 2);
  CHECK(c.ok);
  CHECK(c.source_coordinate == QMatrix{{1, -1}, {-1, 2}});
  CHECK(c.source_coordinate.is_symmetric());
  for (auto m : {Model::A, Model::C})
    CHECK(chart_inverse_check(QMatrix::identity(3), m, 3).source_coordinate == QMatrix::identity(3));
  CHECK_THROWS_AS(chart_inverse_check(QMatrix{{0, 1}, {2, 0}}, Model::C, 2), PreconditionError);
  CHECK_THROWS_AS(chart_inverse_check(QMatrix{{1, 1}, {1, 1}}, Model::D, 2), PreconditionError);
  CHECK_THROWS_AS(chart_inverse_check(QMatrix::identity(2), Model::B, 2), ArgumentError);
  CHECK_THROWS_AS(chart_inverse_check(QMatrix::identity(2), Model::A, 3), ArgumentError);
}

TEST_CASE("chart inversion on random matrices") {
  oracle::PointSampler s(23);
  for (auto m : {Model::A, Model::C, Model::D})
    for (int n = 2; n <= 4; ++n) {
      if (m == Model::D && n % 2 != 0) continue;
      auto shaped = [&](const QMatrix& x) {
        if (m == Model::C) return x + x.transpose();
        if (m == Model::D) return x - x.transpose();
        return x;
      };
      for (int trial = 0; trial < 20;) {
        const QMatrix b = shaped(s.random_matrix(n, n));
        if (b.rank() < static_cast<std::size_t>(n)) continue;
        ++trial;
        const auto r = chart_inverse_check(b, m, n);
        CHECK(r.ok);
        CHECK(r.source_coordinate * b == QMatrix::identity(n));
        CHECK(chart_inverse_check(r.source_coordinate, m, n).source_coordinate == b);
      }
      QMatrix kill = QMatrix::identity(n);
      kill(0, 0) = 0;
      for (int trial = 0; trial < 10; ++trial) {
        const QMatrix x = shaped(s.random_matrix(n, n));
        const QMatrix b = m == Model::A ? x * kill : kill * x * kill;
        const auto r = chart_inverse_check(b, m, n);
        CHECK_FALSE(r.invertible);
        CHECK_FALSE(r.source_limit.source);
        CHECK(r.source_limit.profile[2] == static_cast<int>(b.rank()));
        CHECK(r.ok);
      }
    }
}

TEST_CASE("mu difference across a generic A orbit equals n") {
  oracle::PointSampler s(24);
  for (int n = 2; n <= 4; ++n) {
    const auto f = flow_spec(Model::A, n);
    const auto p = make_point(vstack(QMatrix::identity(n), s.random_matrix(n, n) + Rational(7) * QMatrix::identity(n)),
                              FormTag::None);
    const auto lo = component_membership(flow_limit(p, f, Direction::Zero), f);
    const auto hi = component_membership(flow_limit(p, f, Direction::Infinity), f);
    CHECK(lo.sink);
    CHECK(hi.source);
    CHECK(hi.mu - lo.mu == n);
    CHECK(chamber_count(build_root_datum(DynkinType(Family::A, 2 * n - 1)), n, n) == n);
  }
}

TEST_CASE("json rendering") {
  const auto r = chart_inverse_check(QMatrix{{2, 1}, {1, 1}}, Model::C, 2);
  const auto j = nlohmann::json::parse(to_json(r).dump());
  CHECK(j["ok"] == true);
  CHECK(j["source_coordinate"][1][1] == "2");
  CHECK(j["source_limit"]["profile"] == nlohmann::json::array({0, 0, 2}));
  CHECK(j["source_limit"]["ambient"]["type"] == "C2");
  const auto p = make_point(QMatrix{{1}, {0}, {0}, {Rational(1, 2)}}, FormTag::None);
  CHECK(to_json(p)["basis"][3][0] == "1/2");
}
