#include "cstar/gradings.hpp"

#include <stdexcept>

#include "cstar/errors.hpp"
#include "cstar/weyl.hpp"

namespace cstar {

namespace {

void require_irreducible(const RootDatum& datum) {
  if (!datum.type().irreducible()) {
    throw ArgumentError("gradings are classified for simple types; got " + datum.type().name());
  }
}

}  // namespace

bool is_short(const RootDatum& datum, int i) {
  require_irreducible(datum);
  const std::size_t p = datum.position(i);
  bool all_roots = true;
  for (const auto& r : datum.roots()) {
    const int h = r.coeffs[p];
    if (h < -1 || h > 1) {
      all_roots = false;
      break;
    }
  }
  const bool by_highest = datum.highest_root(i).coeffs[p] == 1;
  if (all_roots != by_highest) {
    throw std::logic_error("shortness criteria disagree at node " + std::to_string(i));
  }
  return all_roots;
}

bool balanced_by_roots(const RootDatum& datum, int i) {
  const WeylWord w0 = longest_element(datum);
  for (const auto& beta : datum.roots()) {
    if (height(datum, i, apply(datum, w0, beta)) != -height(datum, i, beta)) return false;
  }
  return true;
}

bool balanced_by_diagram(const RootDatum& datum, int i) {
  const auto perm = w0_node_involution(datum);
  return perm[datum.position(i)] == i;
}

bool is_balanced(const RootDatum& datum, int i) {
  if (!is_short(datum, i)) {
    throw PreconditionError("balancedness is defined for short gradings only; sigma_" +
                            std::to_string(i) + " on " + datum.type().name() + " is not short");
  }
  const bool roots = balanced_by_roots(datum, i);
  if (roots != balanced_by_diagram(datum, i)) {
    throw std::logic_error("balancedness criteria disagree at node " + std::to_string(i));
  }
  return roots;
}

GradingReport grading_report(const RootDatum& datum, int i) {
  GradingReport rep;
  rep.type = datum.type();
  rep.node = i;
  rep.is_short = is_short(datum, i);
  if (rep.is_short) rep.is_balanced = is_balanced(datum, i);
  const std::size_t p = datum.position(i);
  int neg = 0, zero = 0, pos = 0;
  for (const auto& r : datum.roots()) {
    const int h = r.coeffs[p];
    (h < 0 ? neg : h > 0 ? pos : zero) += 1;
  }
  rep.dims = {neg, zero + static_cast<int>(datum.rank()), pos};
  return rep;
}

std::vector<GradingReport> classify(Family family, int rank_min, int rank_max) {
  if (rank_min > rank_max) throw ArgumentError("empty rank range");
  std::vector<GradingReport> out;
  for (int r = rank_min; r <= rank_max; ++r) {
    try {
      validate_factor({family, r});
    } catch (const ArgumentError&) {
      continue;
    }
    const auto datum = root_datum(DynkinType(family, r));
    for (int i = 1; i <= r; ++i) out.push_back(grading_report(*datum, i));
  }
  return out;
}

nlohmann::json to_json(const GradingReport& r) {
  const auto& f = r.type.factors().front();
  nlohmann::json j;
  j["type"] = std::string(1, family_letter(f.family));
  j["rank"] = f.rank;
  j["node"] = r.node;
  j["short"] = r.is_short;
  if (r.is_balanced) {
    j["balanced"] = *r.is_balanced;
  } else {
    j["balanced"] = nullptr;
  }
  j["dims"] = r.dims;
  return j;
}

}  // namespace cstar
