#include <algorithm>
#include <random>
#include <set>

#include "cstar/errors.hpp"
#include "cstar/weyl.hpp"
#include "doctest.h"

using namespace cstar;

TEST_CASE("simple reflections") {
  const auto a2 = build_root_datum(DynkinType(Family::A, 2));
  CHECK(reflect(a2, 2, a2.fundamental_weight(1)) == a2.fundamental_weight(1));
  CHECK(reflect(a2, 1, a2.fundamental_weight(1)).coords == std::vector<int>{-1, 1});
}

TEST_CASE("reflections are involutions and fix exactly the weights orthogonal to the coroot") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-5, 5);
  const auto f4 = build_root_datum(DynkinType(Family::F, 4));
  const auto e6 = build_root_datum(DynkinType(Family::E, 6));
  for (const RootDatum* d : {&f4, &e6}) {
    for (int trial = 0; trial < 100; ++trial) {
      Weight w{std::vector<int>(d->rank())};
      for (auto& c : w.coords) c = coord(rng);
      const int j = 1 + trial % static_cast<int>(d->rank());
      CHECK(reflect(*d, j, reflect(*d, j, w)) == w);
      CHECK((reflect(*d, j, w) == w) == (w.coords[j - 1] == 0));
    }
  }
}

TEST_CASE("orbit sizes") {
  const auto a4 = build_root_datum(DynkinType(Family::A, 4));
  CHECK(weight_orbit(a4, a4.fundamental_weight(1)).size() == 5);
  const auto e7 = build_root_datum(DynkinType(Family::E, 7));
  // |W(E7)| / |W(E6)| = 2903040 / 51840
  CHECK(weight_orbit(e7, e7.fundamental_weight(7)).size() == 56);
  // |W(E7)| / |W(A2 x A1 x A3)| = 2903040 / (6 * 2 * 24)
  CHECK(weight_orbit(e7, e7.fundamental_weight(4)).size() == 10080);
}

TEST_CASE("orbit invariants: distinct, closed, words reproduce the elements") {
  const auto b3 = build_root_datum(DynkinType(Family::B, 3));
  const auto orbit = weight_orbit(b3, Weight{{1, 0, 1}});
  CHECK(orbit.elements().front().word.length() == 0);
  std::set<Weight> distinct;
  for (const auto& e : orbit.elements()) {
    distinct.insert(e.weight);
    CHECK(apply(b3, e.word, orbit.seed()) == e.weight);
    for (int j = 1; j <= 3; ++j) CHECK(orbit.find(reflect(b3, j, e.weight)) < orbit.size());
    // depth tracks seed - weight in the root basis
    Root d{e.depth};
    Weight diff = b3.root_to_weight(d);
    for (std::size_t a = 0; a < 3; ++a) CHECK(orbit.seed().coords[a] - e.weight.coords[a] == diff.coords[a]);
  }
  CHECK(distinct.size() == orbit.size());
  CHECK(weyl_group_order({Family::B, 3}) % orbit.size() == 0);
}

TEST_CASE("orbit sizes divide |W| for fundamental weights up to rank 7") {
  for (auto t : {DynkinType(Family::A, 6), DynkinType(Family::B, 5), DynkinType(Family::C, 5),
                 DynkinType(Family::D, 6), DynkinType(Family::E, 6), DynkinType(Family::F, 4),
                 DynkinType(Family::G, 2)}) {
    const auto d = build_root_datum(t);
    for (int k = 1; k <= static_cast<int>(d.rank()); ++k) {
      CAPTURE(t.name());
      CAPTURE(k);
      CHECK(weyl_group_order(t.factors()[0]) % weight_orbit(d, d.fundamental_weight(k)).size() == 0);
    }
  }
}

TEST_CASE("orbit cap raises a resource error") {
  const auto e7 = build_root_datum(DynkinType(Family::E, 7));
  CHECK_THROWS_AS(weight_orbit(e7, e7.fundamental_weight(4), 1000), ResourceError);
}

TEST_CASE("longest element") {
  const auto a1 = build_root_datum(DynkinType(Family::A, 1));
  CHECK(longest_element(a1).letters == std::vector<int>{1});
  CHECK(longest_element(build_root_datum(DynkinType(Family::A, 2))).length() == 3);
  const auto e7 = build_root_datum(DynkinType(Family::E, 7));
  const WeylWord w0 = longest_element(e7);
  CHECK(w0.length() == e7.positive_roots().size());
  CHECK(w0.length() == 63);
}

TEST_CASE("w0 maps every positive root to a negative root") {
  for (auto t : {DynkinType(Family::A, 5), DynkinType(Family::C, 4), DynkinType(Family::D, 5),
                 DynkinType(Family::E, 6), DynkinType(Family::G, 2)}) {
    const auto d = build_root_datum(t);
    const auto w0 = longest_element(d);
    for (const auto& r : d.positive_roots()) {
      const Root img = apply(d, w0, r);
      CHECK(std::all_of(img.coeffs.begin(), img.coeffs.end(), [](int c) { return c <= 0; }));
    }
  }
}

TEST_CASE("w0 node involution") {
  CHECK(w0_node_involution(build_root_datum(DynkinType(Family::A, 3))) == std::vector<int>{3, 2, 1});
  CHECK(w0_node_involution(build_root_datum(DynkinType(Family::D, 4))) == std::vector<int>{1, 2, 3, 4});
  CHECK(w0_node_involution(build_root_datum(DynkinType(Family::D, 5))) == std::vector<int>{1, 2, 3, 5, 4});
  CHECK(w0_node_involution(build_root_datum(DynkinType(Family::E, 6))) ==
        std::vector<int>{6, 2, 5, 4, 3, 1});
  for (auto t : {DynkinType(Family::B, 4), DynkinType(Family::C, 3), DynkinType(Family::E, 7),
                 DynkinType(Family::E, 8), DynkinType(Family::F, 4), DynkinType(Family::G, 2),
                 DynkinType(Family::D, 6)}) {
    const auto d = build_root_datum(t);
    const auto s = w0_node_involution(d);
    for (std::size_t a = 0; a < d.rank(); ++a) CHECK(s[a] == d.label(a));
  }
  CHECK_THROWS_AS(w0_node_involution(build_root_datum(DynkinType::parse("A1xA2"))), ArgumentError);
}

TEST_CASE("w0 node involution is a Cartan automorphism") {
  for (auto t : {DynkinType(Family::A, 6), DynkinType(Family::D, 7), DynkinType(Family::E, 6)}) {
    const auto d = build_root_datum(t);
    const auto s = w0_node_involution(d);
    for (std::size_t a = 0; a < d.rank(); ++a)
      for (std::size_t b = 0; b < d.rank(); ++b)
        CHECK(d.cartan(d.position(s[a]), d.position(s[b])) == d.cartan(a, b));
  }
}
