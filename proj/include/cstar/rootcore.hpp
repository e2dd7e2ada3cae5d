#pragma once

// Root systems of (possibly reducible) finite Dynkin types.
//
// Conventions used throughout the library:
//   * roots are integer vectors in the simple-root basis;
//   * weights are integer vectors in the fundamental-weight basis;
//   * cartan(a, b) = <alpha_a, alpha_b^vee>, so row a of the Cartan matrix is
//     alpha_a written in fundamental-weight coordinates, and a root with
//     coefficients c has weight coordinates w_b = sum_a c_a * cartan(a, b);
//   * nodes carry Bourbaki labels.  A datum obtained by deleting nodes keeps
//     the labels of its parent; "position" is the 0-based storage index.
//
// Bourbaki numbering (as stored by build_root_datum):
//   A_n  1-2-...-n
//   B_n  1-2-...-(n-1)=>n      alpha_n short
//   C_n  1-2-...-(n-1)<=n      alpha_n long
//   D_n  1-2-...-(n-2), (n-2)-(n-1), (n-2)-n
//   E_n  1-3-4-5-...-n, 2-4
//   F_4  1-2=>3-4              alpha_1, alpha_2 long
//   G_2  1<=2                  alpha_1 short

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cstar {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family parse_family(char letter);

struct SimpleFactor {
  Family family;
  int rank;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

/// A product of simple Dynkin types; nodes are numbered 1..rank() across
/// factors in order.
class DynkinType {
 public:
  DynkinType() = default;
  explicit DynkinType(std::vector<SimpleFactor> factors);
  DynkinType(Family family, int rank) : DynkinType({SimpleFactor{family, rank}}) {}

  /// "E7", "A2xA2", "A1 x B3".
  static DynkinType parse(const std::string& text);

  const std::vector<SimpleFactor>& factors() const { return factors_; }
  int rank() const;
  bool irreducible() const { return factors_.size() == 1; }
  std::string name() const;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;

 private:
  std::vector<SimpleFactor> factors_;
};

/// Throws ArgumentError unless the family/rank pair is a finite Dynkin type.
void validate_factor(const SimpleFactor& f);

struct Root {
  std::vector<int> coeffs;
  friend auto operator<=>(const Root&, const Root&) = default;
};

struct Weight {
  std::vector<int> coords;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Height map sigma_J: sums the simple-root coefficients over the marked labels.
struct HeightMap {
  std::vector<int> marked;
};

/// A connected component of a datum's diagram, with its recognized type and
/// the positions of its nodes listed in local Bourbaki order.
struct DiagramComponent {
  SimpleFactor type;
  std::vector<std::size_t> positions;
};

class RootDatum {
 public:
  /// Builds the datum from a Cartan matrix and node labels.  Connected
  /// components are recognized and must be of finite type.
  RootDatum(std::vector<std::vector<int>> cartan, std::vector<int> labels);
  /// As above, but with the component structure supplied by the caller (used
  /// by build_root_datum so that e.g. D_3 keeps its declared name).
  RootDatum(std::vector<std::vector<int>> cartan, std::vector<int> labels,
            std::vector<DiagramComponent> components);

  /// Product of the irreducible components recognized from the Cartan matrix.
  const DynkinType& type() const { return type_; }
  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  int cartan(std::size_t a, std::size_t b) const { return cartan_[a][b]; }
  const std::vector<int>& labels() const { return labels_; }
  int label(std::size_t position) const { return labels_.at(position); }
  /// Throws ArgumentError if the label is not a node of this datum.
  std::size_t position(int label) const;
  bool has_label(int label) const;

  /// Positive roots first (sorted by height, then lexicographically), followed
  /// by their negatives in the same order.
  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  bool is_root(const Root& r) const { return index_.count(r.coeffs) != 0; }

  const std::vector<DiagramComponent>& components() const { return components_; }

  Weight root_to_weight(const Root& r) const;
  /// Simple root alpha_a in fundamental-weight coordinates (row a of cartan).
  Weight simple_root_weight(std::size_t position) const;
  Weight fundamental_weight(int label) const;
  /// Highest root of the component containing the given label.
  Root highest_root(int label) const;

  /// Squared lengths of simple roots, normalized so that the shortest simple
  /// root of each component has (alpha, alpha) = 2.
  const std::vector<int>& root_length2() const { return length2_; }

  /// The datum of the diagram with the given labels removed.
  RootDatum delete_nodes(const std::vector<int>& labels) const;
  /// The datum of the sub-diagram spanned by the given labels.
  RootDatum restrict_to(const std::vector<int>& labels) const;

 private:
  void close_roots();
  void recognize_components();

  std::vector<std::vector<int>> cartan_;
  std::vector<int> labels_;
  DynkinType type_;
  std::vector<DiagramComponent> components_;
  std::vector<Root> roots_;
  std::vector<Root> positive_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<int> length2_;
};

/// Cartan matrix of a simple type in Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(const SimpleFactor& f);

/// Complete root system of a Dynkin type, labels 1..n.
RootDatum build_root_datum(const DynkinType& type);

/// Shared, immutable datum cache keyed by type name.
std::shared_ptr<const RootDatum> root_datum(const DynkinType& type);

int height(const RootDatum& datum, const HeightMap& sigma, const Root& beta);
/// Convenience for the singleton height map sigma_label.
int height(const RootDatum& datum, int label, const Root& beta);

/// dim G/P_J = #{beta > 0 : sigma_J(beta) > 0}; zero for empty J.
int rh_dimension(const RootDatum& datum, const std::vector<int>& marked);

/// Restriction of characters to the torus of the diagram with node `label`
/// deleted: drops the coordinate of omega_label.
Weight restrict_weight(const RootDatum& datum, int label, const Weight& lambda);

nlohmann::json to_json(const RootDatum& datum);

}  // namespace cstar
