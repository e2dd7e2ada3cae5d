#include "cstar/weyl.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "cstar/errors.hpp"

namespace cstar {

Weight reflect(const RootDatum& datum, int label, const Weight& lambda) {
  const std::size_t j = datum.position(label);
  const int p = lambda.coords.at(j);
  if (p == 0) return lambda;
  Weight out = lambda;
  const auto& row = datum.cartan()[j];
  for (std::size_t b = 0; b < row.size(); ++b) out.coords[b] -= p * row[b];
  return out;
}

Root reflect(const RootDatum& datum, int label, const Root& beta) {
  const std::size_t j = datum.position(label);
  int p = 0;
  for (std::size_t a = 0; a < beta.coeffs.size(); ++a) p += beta.coeffs[a] * datum.cartan(a, j);
  Root out = beta;
  out.coeffs[j] -= p;
  return out;
}

Weight apply(const RootDatum& datum, const WeylWord& w, Weight lambda) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    lambda = reflect(datum, *it, lambda);
  return lambda;
}

Root apply(const RootDatum& datum, const WeylWord& w, Root beta) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    beta = reflect(datum, *it, beta);
  return beta;
}

WeightOrbit::WeightOrbit(Weight seed, std::vector<OrbitElement> elements)
    : seed_(std::move(seed)), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].weight.coords, i);
}

std::size_t WeightOrbit::find(const Weight& w) const {
  auto it = index_.find(w.coords);
  return it == index_.end() ? elements_.size() : it->second;
}

WeightOrbit weight_orbit(const RootDatum& datum, const Weight& seed, std::size_t cap) {
  const std::size_t n = datum.rank();
  if (seed.coords.size() != n) throw ArgumentError("seed weight has wrong length");
  std::vector<OrbitElement> elements;
  std::map<std::vector<int>, std::size_t> seen;
  elements.push_back({seed, {}, std::vector<int>(n, 0)});
  seen.emplace(seed.coords, 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t j = 0; j < n; ++j) {
      const OrbitElement& cur = elements[head];
      const int p = cur.weight.coords[j];
      if (p == 0) continue;
      Weight next = cur.weight;
      const auto& row = datum.cartan()[j];
      for (std::size_t b = 0; b < n; ++b) next.coords[b] -= p * row[b];
      if (seen.count(next.coords)) continue;
      OrbitElement e;
      e.weight = std::move(next);
      e.word.letters.reserve(cur.word.letters.size() + 1);
      e.word.letters.push_back(datum.label(j));
      e.word.letters.insert(e.word.letters.end(), cur.word.letters.begin(), cur.word.letters.end());
      e.depth = cur.depth;
      e.depth[j] += p;
      seen.emplace(e.weight.coords, elements.size());
      elements.push_back(std::move(e));
      if (elements.size() > cap) {
        throw ResourceError("orbit size exceeds cap of " + std::to_string(cap));
      }
    }
  }
  return WeightOrbit(seed, std::move(elements));
}

WeylWord longest_element(const RootDatum& datum) {
  const std::size_t n = datum.rank();
  Weight lambda{std::vector<int>(n, 1)};
  std::vector<int> applied;
  while (true) {
    std::size_t j = n;
    for (std::size_t a = 0; a < n; ++a)
      if (lambda.coords[a] > 0) {
        j = a;
        break;
      }
    if (j == n) break;
    lambda = reflect(datum, datum.label(j), lambda);
    applied.push_back(datum.label(j));
  }
  return WeylWord{std::vector<int>(applied.rbegin(), applied.rend())};
}

std::vector<int> w0_node_involution_per_component(const RootDatum& datum) {
  const WeylWord w0 = longest_element(datum);
  const std::size_t n = datum.rank();
  std::vector<int> perm(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Root e{std::vector<int>(n, 0)};
    e.coeffs[j] = 1;
    const Root img = apply(datum, w0, e);
    for (std::size_t b = 0; b < n; ++b) {
      if (img.coeffs[b] == -1) {
        perm[j] = datum.label(b);
      } else if (img.coeffs[b] != 0) {
        throw std::logic_error("w0 does not map a simple root to a negative simple root");
      }
    }
  }
  return perm;
}

std::vector<int> w0_node_involution(const RootDatum& datum) {
  if (!datum.type().irreducible()) {
    throw ArgumentError("w0_node_involution needs an irreducible type; got " + datum.type().name());
  }
  return w0_node_involution_per_component(datum);
}

std::uint64_t weyl_group_order(const SimpleFactor& f) {
  auto factorial = [](int k) {
    std::uint64_t r = 1;
    for (int i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
  };
  const int n = f.rank;
  switch (f.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

}  // namespace cstar
