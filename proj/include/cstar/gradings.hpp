#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cstar/rootcore.hpp"
#include "json.hpp"

namespace cstar {

/// Grading of a simple Lie algebra by the height map sigma_node.
struct GradingReport {
  DynkinType type;
  int node = 0;
  bool is_short = false;
  /// Only reported for short gradings.
  std::optional<bool> is_balanced;
  /// Dimensions of g_-, g_0 (root spaces plus Cartan), g_+.
  std::array<int, 3> dims{};
};

/// sigma_i(Phi) = {-1, 0, 1}.  Cross-checked against the coefficient of
/// alpha_i in the highest root.
bool is_short(const RootDatum& datum, int i);

/// Root-wise test sigma_i(w0 beta) = -sigma_i(beta), cross-checked against
/// "-w0 fixes node i".  Throws PreconditionError for a non-short grading.
bool is_balanced(const RootDatum& datum, int i);

/// The two balancedness criteria, separately; used by tests.
bool balanced_by_roots(const RootDatum& datum, int i);
bool balanced_by_diagram(const RootDatum& datum, int i);

GradingReport grading_report(const RootDatum& datum, int i);

/// One report per (rank, node) for a family over a rank range; ranks outside
/// the family's bounds are skipped.
std::vector<GradingReport> classify(Family family, int rank_min, int rank_max);

nlohmann::json to_json(const GradingReport& r);

}  // namespace cstar
