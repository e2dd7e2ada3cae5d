#include "cstar/errors.hpp"
#include "cstar/gradings.hpp"
#include "cstar/weyl.hpp"
#include "doctest.h"

using namespace cstar;

namespace {

RootDatum datum(Family f, int n) { return build_root_datum(DynkinType(f, n)); }

std::vector<int> short_nodes(const std::vector<GradingReport>& reps, int rank) {
  std::vector<int> out;
  for (const auto& r : reps)
    if (r.type.rank() == rank && r.is_short) out.push_back(r.node);
  return out;
}

std::vector<int> balanced_nodes(const std::vector<GradingReport>& reps, int rank) {
  std::vector<int> out;
  for (const auto& r : reps)
    if (r.type.rank() == rank && r.is_balanced.value_or(false)) out.push_back(r.node);
  return out;
}

}  // namespace

TEST_CASE("is_short") {
  CHECK(is_short(datum(Family::A, 5), 3));
  CHECK_FALSE(is_short(datum(Family::B, 4), 2));
  CHECK(is_short(datum(Family::E, 7), 7));
  CHECK_FALSE(is_short(datum(Family::E, 7), 1));
}

TEST_CASE("is_balanced") {
  CHECK(is_balanced(datum(Family::A, 5), 3));
  CHECK_FALSE(is_balanced(datum(Family::A, 5), 2));
  CHECK(is_balanced(datum(Family::D, 5), 1));
  CHECK_FALSE(is_balanced(datum(Family::D, 5), 5));
  CHECK(is_balanced(datum(Family::E, 7), 7));
  CHECK_THROWS_AS(is_balanced(datum(Family::B, 4), 2), PreconditionError);
}

TEST_CASE("classify") {
  const auto e = classify(Family::E, 6, 8);
  CHECK(short_nodes(e, 6) == std::vector<int>{1, 6});
  CHECK(balanced_nodes(e, 6).empty());
  CHECK(short_nodes(e, 7) == std::vector<int>{7});
  CHECK(short_nodes(e, 8).empty());
  const auto c = classify(Family::C, 4, 4);
  CHECK(short_nodes(c, 4) == std::vector<int>{4});
  CHECK(balanced_nodes(c, 4) == std::vector<int>{4});
  CHECK(short_nodes(classify(Family::G, 2, 2), 2).empty());
  CHECK(short_nodes(classify(Family::F, 4, 4), 4).empty());
  // ranks outside the family bounds are skipped
  CHECK(classify(Family::E, 1, 5).empty());
}

TEST_CASE("grading dimensions") {
  for (const auto& r : classify(Family::D, 3, 7)) {
    CHECK(r.dims[0] == r.dims[2]);
    const auto d = root_datum(r.type);
    CHECK(r.dims[0] + r.dims[1] + r.dims[2] ==
          static_cast<int>(d->roots().size() + d->rank()));
    if (r.is_short) {
      int plus = 0;
      for (const auto& b : d->positive_roots()) plus += height(*d, r.node, b) == 1;
      CHECK(r.dims[2] == plus);
    } else {
      CHECK_FALSE(r.is_balanced.has_value());
    }
  }
}

TEST_CASE("the two balancedness criteria agree on every short grading up to rank 8") {
  for (int f = 0; f < 7; ++f) {
    for (const auto& r : classify(static_cast<Family>(f), 1, 8)) {
      if (!r.is_short) continue;
      const auto d = root_datum(r.type);
      CHECK(balanced_by_roots(*d, r.node) == balanced_by_diagram(*d, r.node));
    }
  }
}

TEST_CASE("A_n: node i and node n+1-i are short together") {
  for (int n = 1; n <= 8; ++n) {
    const auto d = datum(Family::A, n);
    for (int i = 1; i <= n; ++i) CHECK(is_short(d, i) == is_short(d, n + 1 - i));
  }
}

TEST_CASE("report json schema") {
  const auto j = to_json(grading_report(datum(Family::B, 3), 2));
  CHECK(j["type"] == "B");
  CHECK(j["rank"] == 3);
  CHECK(j["node"] == 2);
  CHECK(j["short"] == false);
  CHECK(j["balanced"].is_null());
  CHECK(j["dims"].size() == 3);
}
