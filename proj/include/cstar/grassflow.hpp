#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cstar/rational.hpp"
#include "cstar/rootcore.hpp"
#include "json.hpp"

namespace cstar {

/// Matrix models of the classical actions.  With coordinates x_0, x_1, ...:
///
///   A   Gr(k, 2n),               weights (1^n, 0^n),                no form
///   B   OG(k, 2n+1), quadric,    x_0 -> 1, x_n -> -1, others 0,     [[0,I,0],[I,0,0],[0,0,1]]
///   C   LG-type IG(k, 2n),       weights (1^n, 0^n),                [[0,I],[-I,0]]
///   D   OG(k, 2n),               weights (1^n, 0^n),                [[0,I],[I,0]]
///   Dq  OG(k, 2n), quadric,      x_0 -> 1, x_n -> -1, others 0,     [[0,I],[I,0]]
///
/// The weight blocks, in decreasing weight, are called V_-, V_0, V_+ (the
/// split actions have no V_0).  `t` scales x_j by t^{w_j}; the sink limit is
/// lim_{t->0} t^{-1} p, which is dominated by V_-, and the source limit is
/// the same expression as t -> infinity.
enum class Model { A, B, C, D, Dq };
enum class Action { HnSplit, H1Quadric };
enum class FormTag { None, Symmetric, Skew };
enum class Direction { Zero, Infinity };

std::string model_name(Model m);
/// Accepts "A", "B", "C", "D", "Dq" (case-insensitive); throws ArgumentError.
Model parse_model(const std::string& s);

struct FlowSpec {
  Model model;
  Action action;
  int n;
  std::vector<int> weights;

  int ambient_dim() const { return static_cast<int>(weights.size()); }
  /// Coordinate indices of each weight block, ordered V_-, V_0, V_+; V_0 is
  /// empty for split actions.
  std::array<std::vector<std::size_t>, 3> blocks() const;
};

FlowSpec flow_spec(Model m, int n);

FormTag model_form(Model m);
/// Gram matrix of the form of `tag` on `ambient_dim` coordinates with the
/// block layout above.  Throws ArgumentError for FormTag::None or a skew form
/// in odd dimension.
QMatrix form_matrix(FormTag tag, int ambient_dim);

/// A k-dimensional subspace given by a basis in its columns.
struct GrassPoint {
  int ambient_dim;
  int k;
  QMatrix basis;
  FormTag form = FormTag::None;
};

/// Checks shape, full column rank and isotropy; throws ArgumentError
/// (shape) or PreconditionError (rank or isotropy).
GrassPoint make_point(const QMatrix& basis, FormTag form);
bool same_point(const GrassPoint& p, const GrassPoint& q);

/// The image t . p for a nonzero rational t.
GrassPoint act(const GrassPoint& p, const FlowSpec& f, const Rational& t);
bool is_fixed(const GrassPoint& p, const FlowSpec& f);

GrassPoint flow_limit(const GrassPoint& p, const FlowSpec& f, Direction d);

/// Dimension of p intersected with each block, the implied mu and the
/// dimension of the fixed component through p.
struct ComponentDescriptor {
  std::array<int, 3> profile;
  int mu;
  int dim;
  bool sink;
  bool source;
  /// Ambient (type, node of the grading, node of the variety) in the
  /// fixed-point enumeration, when the model realizes a single-node variety.
  std::optional<DynkinType> ambient;
  int grading_node = 0;
  int variety_node = 0;
};

/// Throws PreconditionError when p is not fixed.
ComponentDescriptor component_membership(const GrassPoint& p, const FlowSpec& f);

/// Every intersection profile allowed for a fixed k-subspace in the model,
/// paired with a coordinate representative.
std::vector<GrassPoint> coordinate_fixed_points(const FlowSpec& f, int k);

struct ChartInverseResult {
  bool invertible;
  /// Source-chart coordinate C with p = span[C; I]; only when invertible.
  QMatrix source_coordinate;
  bool matches_inverse;
  /// Descriptor of lim_{t->inf}; outside the source component when B is
  /// singular.
  ComponentDescriptor source_limit;
  bool ok;
};

/// p = span[I; B] in the split model `m` (A, C or D) of size n.  Throws
/// ArgumentError for a bad shape or model, PreconditionError when B lacks the
/// symmetry the model requires.
ChartInverseResult chart_inverse_check(const QMatrix& b, Model m, int n);

nlohmann::json to_json(const GrassPoint& p);
nlohmann::json to_json(const ComponentDescriptor& c);
nlohmann::json to_json(const ChartInverseResult& r);

}  // namespace cstar
