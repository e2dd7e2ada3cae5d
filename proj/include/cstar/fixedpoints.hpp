#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cstar/rootcore.hpp"
#include "cstar/weyl.hpp"
#include "json.hpp"

namespace cstar {

/// One connected component of the fixed locus of the H_i-action on D(k).
///
/// `marking` lists labels of the deleted diagram D^perp = D \ {i}, so the
/// component is the rational homogeneous variety D^perp(J).  An empty marking
/// is an isolated fixed point.
///
/// Normal directions are split by the sign of their H_i-weight.  The sink
/// (mu = 0) is attracting for t -> 0 of t^{-1}x, so all of its normal
/// directions are negative: nu_plus = 0 there, and symmetrically nu_minus = 0
/// at the source.
struct FixedComponent {
  std::vector<int> marking;
  int mu = 0;
  int dim = 0;
  int nu_minus = 0;
  int nu_plus = 0;
  WeylWord rep_word;
  Weight rep_weight;
  std::size_t orbit_size = 0;
};

struct ActionReport {
  DynkinType ambient;
  int k = 0;
  int i = 0;
  int ambient_dim = 0;
  DynkinType perp;
  /// Sorted by (mu, marking).  components.front() is the sink and
  /// components.back() the source.
  std::vector<FixedComponent> components;
  int delta = 0;

  const FixedComponent& sink() const { return components.front(); }
  const FixedComponent& source() const { return components.back(); }
};

/// Fixed components of the H_i-action on D(k): the orbit of omega_k split
/// into orbits of the Weyl group of D^perp.  Requires a short grading.
ActionReport enumerate_components(const RootDatum& datum, int i, int k,
                                  std::size_t orbit_cap = kDefaultOrbitCap);

int chamber_count(const RootDatum& datum, int i, int k, std::size_t orbit_cap = kDefaultOrbitCap);

/// Multiset of weights of D^perp, keyed in the fundamental-weight basis of
/// the deleted diagram (coordinates ordered as in `delete_nodes({i})`).
struct WeightMultiset {
  std::map<Weight, int> entries;

  int total() const;
  void add(const Weight& w, int mult = 1);
  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;
};

enum class Side { Sink, Source };

/// Weights of the H^perp-torus on the fibre of the normal bundle at the base
/// point of the sink (resp. source).
WeightMultiset normal_weights(const RootDatum& datum, int i, int k, Side side);

/// Nodes of D^perp whose reflections fix the base point of the sink
/// (resp. source).  The normal fibre is a module for this Levi factor.
std::vector<int> levi_nodes(const RootDatum& datum, int i, int k, Side side);

struct IrreducibleSummand {
  Weight highest;
  int multiplicity = 0;
  int dim = 0;
};

inline constexpr std::size_t kMaxLeviRank = 7;
inline constexpr int kMaxModuleRank = 10'000;

/// Character of the irreducible module of the Levi factor on `levi` with the
/// given highest weight, by Freudenthal's multiplicity formula.  Weights keep
/// all coordinates of `perp`.
WeightMultiset irreducible_character(const RootDatum& perp, const std::vector<int>& levi,
                                     const Weight& highest);

/// Splits a character of the Levi factor on `levi` into irreducibles by
/// repeatedly removing the character of a highest remaining weight.
std::vector<IrreducibleSummand> decompose_character(const RootDatum& perp,
                                                    const WeightMultiset& weights,
                                                    const std::vector<int>& levi);

/// "A2(2) x pt" style name of D^perp(J), using Bourbaki numbering inside
/// each simple factor.
std::string marked_variety_name(const RootDatum& perp, const std::vector<int>& marking);

nlohmann::json to_json(const ActionReport& report);
nlohmann::json to_json(const WeightMultiset& m);
std::string to_table(const ActionReport& report);

}  // namespace cstar
