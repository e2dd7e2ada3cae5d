#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "cstar/errors.hpp"
#include "cstar/fixedpoints.hpp"
#include "cstar/rational.hpp"

namespace cstar {

namespace {

struct Levi {
  std::vector<std::size_t> pos;        // positions in perp
  std::vector<long> len2;              // root lengths squared, per levi node
  std::vector<std::vector<int>> cartan;  // levi-local Cartan matrix
  std::vector<Root> positive;          // levi-local coordinates
  std::vector<Weight> positive_weights;  // the same roots as weights of perp
};

Levi make_levi(const RootDatum& perp, const std::vector<int>& levi_labels) {
  if (levi_labels.size() > kMaxLeviRank) {
    throw ResourceError("Levi factor of rank " + std::to_string(levi_labels.size()) +
                        " exceeds the cap of " + std::to_string(kMaxLeviRank));
  }
  Levi L;
  const RootDatum sub = perp.restrict_to(levi_labels);
  for (std::size_t a = 0; a < sub.rank(); ++a) {
    L.pos.push_back(perp.position(sub.label(a)));
    L.len2.push_back(sub.root_length2()[a]);
  }
  L.cartan = sub.cartan();
  L.positive = sub.positive_roots();
  for (const auto& r : L.positive) {
    Weight w{std::vector<int>(perp.rank(), 0)};
    for (std::size_t a = 0; a < r.coeffs.size(); ++a)
      for (std::size_t b = 0; b < perp.rank(); ++b) w.coords[b] += r.coeffs[a] * perp.cartan(L.pos[a], b);
    L.positive_weights.push_back(std::move(w));
  }
  return L;
}

// 2 (lambda, alpha) for alpha = sum c_a alpha_a, with (alpha_a, alpha_a) = len2_a.
long twice_pairing(const Levi& L, const Weight& lambda, const Root& alpha) {
  long s = 0;
  for (std::size_t a = 0; a < L.pos.size(); ++a) s += static_cast<long>(alpha.coeffs[a]) * lambda.coords[L.pos[a]] * L.len2[a];
  return s;
}

bool levi_dominant(const Levi& L, const Weight& w) {
  for (auto p : L.pos)
    if (w.coords[p] < 0) return false;
  return true;
}

}  // namespace

WeightMultiset irreducible_character(const RootDatum& perp, const std::vector<int>& levi,
                                     const Weight& highest) {
  const Levi L = make_levi(perp, levi);
  if (highest.coords.size() != perp.rank()) throw ArgumentError("weight length mismatch");
  if (!levi_dominant(L, highest)) throw ArgumentError("highest weight is not dominant for the Levi factor");
  const std::size_t r = L.pos.size();

  // 2((h+rho)^2 - (mu+rho)^2) for mu = h - sum c_a alpha_a.
  auto gap = [&](const std::vector<int>& c) {
    long lin = 0, quad = 0;
    for (std::size_t a = 0; a < r; ++a) {
      lin += static_cast<long>(c[a]) * (highest.coords[L.pos[a]] + 1) * L.len2[a];
      for (std::size_t b = 0; b < r; ++b) quad += static_cast<long>(c[a]) * c[b] * L.cartan[a][b] * L.len2[b];
    }
    return 2 * lin - quad;
  };

  std::map<std::vector<int>, long> mult;  // keyed by depth c
  std::map<std::vector<int>, Weight> weight_of;
  mult[std::vector<int>(r, 0)] = 1;
  weight_of[std::vector<int>(r, 0)] = highest;
  long total = 1;

  // Depth layers: every weight is reached from h by subtracting simple roots
  // through weights, so a weight of multiplicity zero is never expanded.
  std::vector<std::vector<int>> layer{std::vector<int>(r, 0)};
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& c : layer) {
      if (mult[c] == 0) continue;
      for (std::size_t a = 0; a < r; ++a) {
        auto d = c;
        ++d[a];
        if (!mult.count(d)) next.insert(d);
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& c : layer) {
      Weight mu = highest;
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < perp.rank(); ++b) mu.coords[b] -= c[a] * perp.cartan(L.pos[a], b);
      long rhs = 0;
      for (std::size_t x = 0; x < L.positive.size(); ++x) {
        const Root& alpha = L.positive[x];
        auto up = c;
        Weight shifted = mu;
        for (int t = 1;; ++t) {
          bool inside = true;
          for (std::size_t a = 0; a < r; ++a) {
            up[a] -= alpha.coeffs[a];
            if (up[a] < 0) inside = false;
          }
          if (!inside) break;
          for (std::size_t b = 0; b < perp.rank(); ++b) shifted.coords[b] += L.positive_weights[x].coords[b];
          auto it = mult.find(up);
          if (it == mult.end() || it->second == 0) continue;
          rhs += it->second * twice_pairing(L, shifted, alpha);
        }
      }
      const long g = gap(c);
      long m = 0;
      if (g > 0) {
        if ((2 * rhs) % g != 0) throw std::logic_error("Freudenthal recursion produced a fraction");
        m = 2 * rhs / g;
      } else if (rhs != 0) {
        throw std::logic_error("Freudenthal recursion: nonzero right side with vanishing gap");
      }
      if (m < 0) throw std::logic_error("negative weight multiplicity");
      mult[c] = m;
      weight_of[c] = mu;
      total += m;
      if (total > kMaxModuleRank) {
        throw ResourceError("irreducible module exceeds rank " + std::to_string(kMaxModuleRank));
      }
    }
  }

  WeightMultiset out;
  for (const auto& [c, m] : mult)
    if (m > 0) out.add(weight_of[c], static_cast<int>(m));
  return out;
}

std::vector<IrreducibleSummand> decompose_character(const RootDatum& perp,
                                                    const WeightMultiset& weights,
                                                    const std::vector<int>& levi) {
  const Levi L = make_levi(perp, levi);
  if (weights.total() > kMaxModuleRank) {
    throw ResourceError("module rank " + std::to_string(weights.total()) + " exceeds the cap of " +
                        std::to_string(kMaxModuleRank));
  }
  for (const auto& [w, m] : weights.entries) {
    if (m < 0) throw ArgumentError("negative multiplicity in character");
    if (w.coords.size() != perp.rank()) throw ArgumentError("weight length mismatch");
  }
  for (int j : levi) {
    for (const auto& [w, m] : weights.entries) {
      const auto it = weights.entries.find(reflect(perp, j, w));
      if (it == weights.entries.end() || it->second != m) {
        throw PreconditionError("weights are not invariant under the reflection s_" + std::to_string(j));
      }
    }
  }

  // f(lambda) = <lambda, 2 rho^vee> strictly increases along positive roots.
  const std::size_t r = L.pos.size();
  QMatrix ct(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) ct(a, b) = L.cartan[a][b];
  QMatrix two(r, 1);
  for (std::size_t a = 0; a < r; ++a) two(a, 0) = 2;
  const QMatrix coef = r ? ct.inverse() * two : QMatrix(0, 1);
  auto height_of = [&](const Weight& w) {
    Rational s = 0;
    for (std::size_t a = 0; a < r; ++a) s += coef(a, 0) * w.coords[L.pos[a]];
    return s;
  };

  WeightMultiset rest = weights;
  std::vector<IrreducibleSummand> out;
  while (!rest.entries.empty()) {
    auto best = rest.entries.begin();
    Rational best_h = height_of(best->first);
    for (auto it = std::next(rest.entries.begin()); it != rest.entries.end(); ++it) {
      const Rational h = height_of(it->first);
      if (h > best_h) {
        best = it;
        best_h = h;
      }
    }
    const Weight top = best->first;
    const int m = best->second;
    if (!levi_dominant(L, top)) throw PreconditionError("weights do not form a character of the Levi factor");
    const WeightMultiset ch = irreducible_character(perp, levi, top);
    for (const auto& [w, c] : ch.entries) {
      auto it = rest.entries.find(w);
      if (it == rest.entries.end() || it->second < m * c) {
        throw PreconditionError("weights do not form a character of the Levi factor");
      }
      rest.add(w, -m * c);
    }
    out.push_back({top, m, ch.total()});
  }
  std::sort(out.begin(), out.end(), [](const IrreducibleSummand& a, const IrreducibleSummand& b) {
    return std::tie(b.dim, a.highest) < std::tie(a.dim, b.highest);
  });
  return out;
}

}  // namespace cstar
