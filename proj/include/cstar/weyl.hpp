#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "cstar/rootcore.hpp"

namespace cstar {

/// A word in simple reflections, by node label.  Words act right to left:
/// letters {j1, ..., jm} act as s_j1(s_j2(...s_jm(x))).
struct WeylWord {
  std::vector<int> letters;
  std::size_t length() const { return letters.size(); }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

inline constexpr std::size_t kDefaultOrbitCap = 10'000'000;

Weight reflect(const RootDatum& datum, int label, const Weight& lambda);
Root reflect(const RootDatum& datum, int label, const Root& beta);

Weight apply(const RootDatum& datum, const WeylWord& w, Weight lambda);
Root apply(const RootDatum& datum, const WeylWord& w, Root beta);

struct OrbitElement {
  Weight weight;
  WeylWord word;
  /// seed - weight in simple-root coordinates (nonnegative).
  std::vector<int> depth;
};

/// The W-orbit of a weight, in breadth-first order from the seed.  Each
/// element carries a shortest word taking the seed to it.
class WeightOrbit {
 public:
  WeightOrbit(Weight seed, std::vector<OrbitElement> elements);

  const Weight& seed() const { return seed_; }
  const std::vector<OrbitElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  /// Index of a weight in elements(), or size() when absent.
  std::size_t find(const Weight& w) const;

 private:
  Weight seed_;
  std::vector<OrbitElement> elements_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// Breadth-first enumeration; throws ResourceError once more than `cap`
/// elements have been found.
WeightOrbit weight_orbit(const RootDatum& datum, const Weight& seed,
                         std::size_t cap = kDefaultOrbitCap);

/// Longest element, obtained by driving rho to -rho through simple
/// reflections that lower it.
WeylWord longest_element(const RootDatum& datum);

/// Node permutation j -> j' with w0(alpha_j) = -alpha_j', indexed by
/// position and returning labels.  Requires an irreducible datum.
std::vector<int> w0_node_involution(const RootDatum& datum);

/// Same permutation computed componentwise, valid for reducible data.
std::vector<int> w0_node_involution_per_component(const RootDatum& datum);

/// |W| for a simple type.
std::uint64_t weyl_group_order(const SimpleFactor& f);

}  // namespace cstar
