#include "cstar/fixedpoints.hpp"

#include <algorithm>
#include <numeric>
#include <array>
#include <cstdio>
#include <tuple>
#include <sstream>
#include <stdexcept>

#include "cstar/errors.hpp"
#include "cstar/gradings.hpp"

namespace cstar {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_short(const RootDatum& datum, int i, int k) {
  if (!datum.has_label(i) || !datum.has_label(k)) {
    throw ArgumentError("nodes i=" + std::to_string(i) + ", k=" + std::to_string(k) +
                        " must lie in 1.." + std::to_string(datum.rank()));
  }
  if (!is_short(datum, i)) {
    throw PreconditionError("sigma_" + std::to_string(i) + " on " + datum.type().name() +
                            " is not a short grading");
  }
}

// Directions of the tangent space at the fixed point w.P_k, sorted by the
// sign of their H_i-weight: {tangent, negative, positive}.
std::array<int, 3> split_tangent(const RootDatum& datum, int i, int k, const WeylWord& w) {
  const std::size_t pi = datum.position(i);
  const std::size_t pk = datum.position(k);
  std::array<int, 3> out{0, 0, 0};
  for (const auto& beta : datum.roots()) {
    if (beta.coeffs[pk] >= 0) continue;
    const int s = apply(datum, w, beta).coeffs[pi];
    if (s == 0) {
      ++out[0];
    } else if (s < 0) {
      ++out[1];
    } else {
      ++out[2];
    }
  }
  return out;
}

}  // namespace

ActionReport enumerate_components(const RootDatum& datum, int i, int k, std::size_t orbit_cap) {
  require_short(datum, i, k);
  const std::size_t pi = datum.position(i);
  const WeightOrbit orbit = weight_orbit(datum, datum.fundamental_weight(k), orbit_cap);
  const auto& elems = orbit.elements();

  DisjointSets sets(elems.size());
  for (std::size_t e = 0; e < elems.size(); ++e) {
    for (int j : datum.labels()) {
      if (j == i) continue;
      sets.unite(e, orbit.find(reflect(datum, j, elems[e].weight)));
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t e = 0; e < elems.size(); ++e) groups[sets.find(e)].push_back(e);

  ActionReport report;
  report.ambient = datum.type();
  report.i = i;
  report.k = k;
  report.ambient_dim = rh_dimension(datum, {k});
  const RootDatum perp = datum.delete_nodes({i});
  report.perp = perp.type();

  for (const auto& [root, members] : groups) {
    FixedComponent c;
    const OrbitElement& rep = elems[members.front()];
    c.mu = rep.depth[pi];
    c.rep_word = rep.word;
    c.rep_weight = rep.weight;
    c.orbit_size = members.size();

    std::size_t dominant_count = 0;
    for (std::size_t m : members) {
      const OrbitElement& e = elems[m];
      if (e.depth[pi] != c.mu) throw std::logic_error("mu is not constant on a fixed component");
      bool dominant = true;
      for (std::size_t a = 0; a < datum.rank(); ++a)
        if (a != pi && e.weight.coords[a] < 0) dominant = false;
      if (!dominant) continue;
      ++dominant_count;
      for (std::size_t a = 0; a < datum.rank(); ++a)
        if (a != pi && e.weight.coords[a] > 0) c.marking.push_back(datum.label(a));
    }
    if (dominant_count != 1) throw std::logic_error("fixed component without a unique dominant member");
    std::sort(c.marking.begin(), c.marking.end());

    const auto split = split_tangent(datum, i, k, c.rep_word);
    c.dim = split[0];
    c.nu_minus = split[1];
    c.nu_plus = split[2];
    report.components.push_back(std::move(c));
  }

  std::sort(report.components.begin(), report.components.end(),
            [](const FixedComponent& a, const FixedComponent& b) {
              return std::tie(a.mu, a.marking) < std::tie(b.mu, b.marking);
            });
  report.delta = report.components.back().mu - report.components.front().mu;

  const auto& cs = report.components;
  if (cs.front().mu != 0 || (cs.size() > 1 && cs[1].mu == 0) ||
      (cs.size() > 1 && cs[cs.size() - 2].mu == report.delta)) {
    throw std::logic_error("sink or source is not a single component");
  }
  const Weight opposite = apply(datum, longest_element(datum), orbit.seed());
  const std::size_t at = orbit.find(opposite);
  if (at == orbit.size() || elems[at].depth[pi] != report.delta) {
    throw std::logic_error("w0(omega_k) does not lie on the component of maximal mu");
  }
  return report;
}

int chamber_count(const RootDatum& datum, int i, int k, std::size_t orbit_cap) {
  return enumerate_components(datum, i, k, orbit_cap).delta;
}

int WeightMultiset::total() const {
  int t = 0;
  for (const auto& [w, m] : entries) t += m;
  return t;
}

void WeightMultiset::add(const Weight& w, int mult) {
  const int now = (entries[w] += mult);
  if (now == 0) entries.erase(w);
}

WeightMultiset normal_weights(const RootDatum& datum, int i, int k, Side side) {
  require_short(datum, i, k);
  const std::size_t pi = datum.position(i);
  const std::size_t pk = datum.position(k);
  const WeylWord w0 = longest_element(datum);
  WeightMultiset out;
  for (const auto& beta : datum.positive_roots()) {
    if (beta.coeffs[pi] <= 0) continue;
    if (side == Side::Sink) {
      if (beta.coeffs[pk] <= 0) continue;
      Root neg = beta;
      for (auto& c : neg.coeffs) c = -c;
      out.add(restrict_weight(datum, i, datum.root_to_weight(neg)));
    } else {
      if (apply(datum, w0, beta).coeffs[pk] >= 0) continue;
      out.add(restrict_weight(datum, i, datum.root_to_weight(beta)));
    }
  }
  return out;
}

std::vector<int> levi_nodes(const RootDatum& datum, int i, int k, Side side) {
  require_short(datum, i, k);
  Weight base = datum.fundamental_weight(k);
  if (side == Side::Source) base = apply(datum, longest_element(datum), base);
  std::vector<int> out;
  for (std::size_t a = 0; a < datum.rank(); ++a)
    if (datum.label(a) != i && base.coords[a] == 0) out.push_back(datum.label(a));
  return out;
}

std::string marked_variety_name(const RootDatum& perp, const std::vector<int>& marking) {
  if (perp.rank() == 0) return "pt";
  std::ostringstream os;
  bool first = true;
  for (const auto& comp : perp.components()) {
    if (!first) os << " x ";
    first = false;
    std::vector<int> local;
    for (std::size_t l = 0; l < comp.positions.size(); ++l)
      if (std::find(marking.begin(), marking.end(), perp.label(comp.positions[l])) != marking.end())
        local.push_back(static_cast<int>(l) + 1);
    if (local.empty()) {
      os << "pt";
      continue;
    }
    os << family_letter(comp.type.family) << comp.type.rank << '(';
    for (std::size_t x = 0; x < local.size(); ++x) os << (x ? "," : "") << local[x];
    os << ')';
  }
  return os.str();
}

nlohmann::json to_json(const ActionReport& report) {
  const auto& f = report.ambient.factors().front();
  nlohmann::json j;
  j["ambient"] = {{"type", std::string(1, family_letter(f.family))},
                  {"rank", f.rank},
                  {"k", report.k},
                  {"dim", report.ambient_dim}};
  j["i"] = report.i;
  j["perp"] = report.perp.name();
  j["delta"] = report.delta;
  const RootDatum perp = root_datum(report.ambient)->delete_nodes({report.i});
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : report.components) {
    comps.push_back({{"J", c.marking},
                     {"variety", marked_variety_name(perp, c.marking)},
                     {"mu", c.mu},
                     {"dim", c.dim},
                     {"nu_minus", c.nu_minus},
                     {"nu_plus", c.nu_plus},
                     {"fixed_points", c.orbit_size},
                     {"rep_word", c.rep_word.letters}});
  }
  j["components"] = std::move(comps);
  return j;
}

nlohmann::json to_json(const WeightMultiset& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, mult] : m.entries) arr.push_back({{"weight", w.coords}, {"mult", mult}});
  return arr;
}

std::string to_table(const ActionReport& report) {
  const RootDatum perp = root_datum(report.ambient)->delete_nodes({report.i});
  std::ostringstream os;
  os << report.ambient.name() << "(" << report.k << "), sigma_" << report.i
     << ", dim " << report.ambient_dim << ", delta " << report.delta << "\n";
  os << "mu  component                 J            dim  nu-  nu+  fixed\n";
  for (const auto& c : report.components) {
    std::string j = "{";
    for (std::size_t x = 0; x < c.marking.size(); ++x) j += (x ? "," : "") + std::to_string(c.marking[x]);
    j += "}";
    char line[160];
    std::snprintf(line, sizeof line, "%-3d %-25s %-12s %-4d %-4d %-4d %zu\n", c.mu,
                  marked_variety_name(perp, c.marking).c_str(), j.c_str(), c.dim, c.nu_minus,
                  c.nu_plus, c.orbit_size);
    os << line;
  }
  return os.str();
}

}  // namespace cstar
