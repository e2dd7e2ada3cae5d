#include "cstar/report.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "cstar/errors.hpp"
#include "cstar/fixedpoints.hpp"
#include "cstar/gradings.hpp"
#include "cstar/jordan.hpp"
#include "cstar/json_io.hpp"

namespace cstar {

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string join(const std::vector<int>& v, const std::string& sep = " ") {
  std::string out;
  for (std::size_t j = 0; j < v.size(); ++j) out += (j ? sep : "") + std::to_string(v[j]);
  return out;
}

std::string variety(const RootDatum& datum, int i, const FixedComponent& c) {
  return marked_variety_name(datum.delete_nodes({i}), c.marking);
}

// Ranks of the irreducible constituents of the sink normal fibre, or nothing
// when the Levi factor or the module exceeds the peeling caps.
std::optional<std::vector<int>> sink_constituents(const RootDatum& datum, int i, int k) {
  try {
    const RootDatum perp = datum.delete_nodes({i});
    const auto parts =
        decompose_character(perp, normal_weights(datum, i, k, Side::Sink), levi_nodes(datum, i, k, Side::Sink));
    std::vector<int> ranks;
    for (const auto& p : parts)
      for (int m = 0; m < p.multiplicity; ++m) ranks.push_back(p.dim);
    return ranks;
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

struct TypeRange {
  Family family;
  int lo, hi;
};

const std::vector<TypeRange> kClassificationRanges{{Family::A, 1, 7}, {Family::B, 2, 7}, {Family::C, 2, 7},
                                                   {Family::D, 3, 7}, {Family::E, 6, 8}, {Family::F, 4, 4},
                                                   {Family::G, 2, 2}};

std::vector<GradingReport> classification() {
  std::vector<GradingReport> out;
  for (const auto& r : kClassificationRanges) {
    auto part = classify(r.family, r.lo, r.hi);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// type name -> nodes satisfying `pred`, in classification order
template <class Pred>
std::vector<std::pair<std::string, std::vector<int>>> nodes_by_type(const std::vector<GradingReport>& rows,
                                                                    Pred pred) {
  std::vector<std::pair<std::string, std::vector<int>>> out;
  for (const auto& r : rows) {
    const std::string name = r.type.name();
    if (out.empty() || out.back().first != name) out.push_back({name, {}});
    if (pred(r)) out.back().second.push_back(r.node);
  }
  return out;
}

nlohmann::json nodes_json(const std::vector<std::pair<std::string, std::vector<int>>>& rows) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, nodes] : rows) j[name] = nodes;
  return j;
}

std::string nodes_table(const std::string& title,
                        const std::vector<std::pair<std::string, std::vector<int>>>& rows) {
  std::string out = title + "\n" + pad("type", 6) + "nodes\n";
  for (const auto& [name, nodes] : rows) out += pad(name, 6) + (nodes.empty() ? "-" : join(nodes)) + "\n";
  return out;
}

bool is_short_balanced(const GradingReport& r) { return r.is_short && r.is_balanced.value_or(false); }

ReportBundle short_table() {
  const auto rows = nodes_by_type(classification(), [](const GradingReport& r) { return r.is_short; });
  return {"report-tables", {{"table", "short"}}, nodes_json(rows), nodes_table("Short gradings", rows)};
}

ReportBundle balanced_table() {
  const auto rows = nodes_by_type(classification(), is_short_balanced);
  return {"report-tables", {{"table", "balanced"}}, nodes_json(rows),
          nodes_table("Balanced short gradings", rows)};
}

ReportBundle summary_table(std::size_t cap) {
  std::vector<GradingReport> rows;
  for (const auto& r : classification())
    if (is_short_balanced(r) && (r.type.rank() <= 6 || r.type.name() == "E7")) rows.push_back(r);

  nlohmann::json payload = nlohmann::json::array();
  std::string table = "Balanced short gradings: fixed-point data of the extremal components\n" +
                      pad("X", 8) + pad("sigma", 7) + pad("Y-", 22) + pad("Y+", 22) + pad("rank N-", 9) +
                      pad("rank N+", 9) + "sink constituents\n";
  for (const auto& g : rows) {
    const auto datum = root_datum(g.type);
    for (int k = 1; k <= g.type.rank(); ++k) {
      const auto rep = enumerate_components(*datum, g.node, k, cap);
      const auto parts = sink_constituents(*datum, g.node, k);
      const std::string x = g.type.name() + "(" + std::to_string(k) + ")";
      const std::string ym = variety(*datum, g.node, rep.sink()), yp = variety(*datum, g.node, rep.source());
      payload.push_back({{"X", x},
                         {"sigma", g.node},
                         {"Y_minus", ym},
                         {"Y_plus", yp},
                         {"rank_N_minus", rep.sink().nu_minus},
                         {"rank_N_plus", rep.source().nu_plus},
                         {"sink_constituents", parts ? nlohmann::json(*parts) : nlohmann::json(nullptr)}});
      table += pad(x, 8) + pad(std::to_string(g.node), 7) + pad(ym, 22) + pad(yp, 22) +
               pad(std::to_string(rep.sink().nu_minus), 9) + pad(std::to_string(rep.source().nu_plus), 9) +
               (parts ? join(*parts, " + ") : "-") + "\n";
    }
  }
  return {"report-tables", {{"table", "summary"}}, payload, table};
}

ReportBundle e7_table(std::size_t cap) {
  const auto datum = root_datum(DynkinType(Family::E, 7));
  nlohmann::json payload = nlohmann::json::array();
  std::string table = "E7, sigma_7\n" + pad("k", 4) + pad("Y-", 12) + pad("Y+", 12) + pad("dim", 5) + "rank\n";
  for (int k = 1; k <= 7; ++k) {
    const auto rep = enumerate_components(*datum, 7, k, cap);
    const std::string ym = variety(*datum, 7, rep.sink()), yp = variety(*datum, 7, rep.source());
    payload.push_back({{"k", k},
                       {"Y_minus", ym},
                       {"Y_plus", yp},
                       {"dim", rep.sink().dim},
                       {"rank", rep.sink().nu_minus}});
    table += pad(std::to_string(k), 4) + pad(ym, 12) + pad(yp, 12) + pad(std::to_string(rep.sink().dim), 5) +
             std::to_string(rep.sink().nu_minus) + "\n";
  }
  return {"report-tables", {{"table", "e7"}}, payload, table};
}

ReportBundle classical_table(Family family, std::size_t cap) {
  nlohmann::json payload = nlohmann::json::array();
  std::string table;
  const int lo = family == Family::D ? 4 : 3;
  for (int n = lo; n <= 6; ++n) {
    const auto datum = root_datum(DynkinType(family, n));
    std::vector<int> nodes;
    switch (family) {
      case Family::A:
        for (int i = 1; i <= n; ++i) nodes.push_back(i);
        break;
      case Family::B: nodes = {1}; break;
      case Family::C: nodes = {n}; break;
      default: nodes = {1, n - 1, n}; break;
    }
    for (int i : nodes)
      for (int k = 1; k <= n; ++k) {
        const auto rep = enumerate_components(*datum, i, k, cap);
        payload.push_back(to_json(rep));
        table += to_table(rep) + "\n";
      }
  }
  return {"report-tables", {{"table", std::string("classical_") + family_letter(family)}}, payload, table};
}

std::string element_line(const JordanElement& x) { return to_json(x)["entries"].dump(); }

GrassPoint point_from(Model model, int n, const nlohmann::json& matrix) {
  const FlowSpec f = flow_spec(model, n);
  const QMatrix basis = matrix_from_json(matrix);
  if (basis.rows() != static_cast<std::size_t>(f.ambient_dim()))
    throw ArgumentError("matrix must have " + std::to_string(f.ambient_dim()) + " rows for the " +
                        model_name(model) + " model with n = " + std::to_string(n));
  return make_point(basis, model_form(model));
}

std::string matrix_lines(const QMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "  ";
    for (std::size_t c = 0; c < m.cols(); ++c) out += pad(to_string(m(r, c)), 7);
    out += "\n";
  }
  return out;
}

std::string descriptor_line(const ComponentDescriptor& d) {
  std::string s = "profile (V-, V0, V+) = (" + join({d.profile[0], d.profile[1], d.profile[2]}, ", ") +
                  "), mu " + std::to_string(d.mu) + ", component dim " + std::to_string(d.dim);
  if (d.sink) s += ", sink";
  if (d.source) s += ", source";
  if (d.ambient)
    s += ", " + d.ambient->name() + "(" + std::to_string(d.variety_node) + ") sigma_" +
         std::to_string(d.grading_node);
  return s + "\n";
}

}  // namespace

nlohmann::json to_json(const ReportBundle& b) {
  return {{"command", b.command}, {"params", b.params}, {"result", b.payload}};
}

ReportBundle gradings_bundle(Family family, int rank_min, int rank_max) {
  if (rank_min > rank_max) throw ArgumentError("rank range is empty");
  const auto rows = classify(family, rank_min, rank_max);
  nlohmann::json list = nlohmann::json::array();
  std::string table = pad("type", 6) + pad("node", 6) + pad("short", 7) + pad("balanced", 10) + pad("g-", 5) +
                      pad("g0", 5) + "g+\n";
  for (const auto& r : rows) {
    list.push_back(to_json(r));
    table += pad(r.type.name(), 6) + pad(std::to_string(r.node), 6) + pad(r.is_short ? "yes" : "no", 7) +
             pad(r.is_balanced ? (*r.is_balanced ? "yes" : "no") : "-", 10) + pad(std::to_string(r.dims[0]), 5) +
             pad(std::to_string(r.dims[1]), 5) + std::to_string(r.dims[2]) + "\n";
  }
  const auto shorts = nodes_by_type(rows, [](const GradingReport& r) { return r.is_short; });
  const auto balanced = nodes_by_type(rows, is_short_balanced);
  return {"gradings",
          {{"family", std::string(1, family_letter(family))}, {"rank_min", rank_min}, {"rank_max", rank_max}},
          {{"gradings", list}, {"short", nodes_json(shorts)}, {"balanced", nodes_json(balanced)}},
          table};
}

ReportBundle fixed_points_bundle(Family family, int rank, int i, int k, std::size_t orbit_cap) {
  const DynkinType type(family, rank);
  const auto datum = root_datum(type);
  const auto rep = enumerate_components(*datum, i, k, orbit_cap);
  nlohmann::json payload = to_json(rep);
  const auto parts = sink_constituents(*datum, i, k);
  payload["sink_constituents"] = parts ? nlohmann::json(*parts) : nlohmann::json(nullptr);
  std::string table = to_table(rep);
  table += "sink normal constituents: " + (parts ? join(*parts, " + ") : std::string("not peeled")) + "\n";
  return {"fixed-points",
          {{"family", std::string(1, family_letter(family))}, {"rank", rank}, {"i", i}, {"k", k}},
          payload,
          table};
}

ReportBundle jordan_bundle(const std::string& op, const nlohmann::json& element, const Rational& t) {
  const JordanElement x = jordan_from_json(element);
  const Rational nx = norm(x);
  nlohmann::json payload{{"kind", kind_name(x)}, {"norm", to_string(nx)}};
  std::string table = "kind: " + kind_name(x) + "\nnorm: " + to_string(nx) + "\n";
  if (op == "invert") {
    const auto inv = jinvert(x);
    payload["inverse"] = to_json(inv);
    table += "inverse: " + element_line(inv) + "\n";
  } else if (op == "cremona") {
    const auto c = cremona(x);
    payload["cremona"] = to_json(c);
    payload["norm_power"] = cremona_norm_power(x);
    table += "cremona: " + element_line(c) + "\nnorm power of cremona o cremona: " +
             std::to_string(cremona_norm_power(x)) + "\n";
  } else if (op == "check") {
    if (t == 0) throw ArgumentError("the homogeneity scalar must be nonzero");
    const auto inv = jinvert(x);
    const auto one = unit_like(x);
    const int e = cremona_norm_power(x);
    const Rational factor = e >= 0 ? pow(nx, e) : Rational(1 / pow(nx, -e));
    const std::vector<std::pair<std::string, bool>> checks{
        {"inverse_is_involution", jinvert(inv) == x},
        {"x_o_inverse_is_unit", jordan_product(x, inv) == one},
        {"x2_o_inverse_is_x", jordan_product(jordan_product(x, x), inv) == x},
        {"norm_times_inverse_is_cremona", scale(nx, inv) == cremona(x)},
        {"cremona_squared", cremona(cremona(x)) == scale(factor, x)},
        {"homogeneity", equivariance_check(x, t)}};
    nlohmann::json results = nlohmann::json::object();
    bool all = true;
    for (const auto& [name, ok] : checks) {
      results[name] = ok;
      all = all && ok;
      table += pad(name, 32) + (ok ? "pass" : "FAIL") + "\n";
    }
    payload["checks"] = results;
    payload["all_pass"] = all;
  } else {
    throw ArgumentError("unknown jordan operation '" + op + "'");
  }
  return {"jordan " + op, {{"element", element}, {"t", to_string(t)}}, payload, table};
}

ReportBundle flow_limit_bundle(Model model, int n, int k, Direction dir, const nlohmann::json& matrix) {
  const FlowSpec f = flow_spec(model, n);
  const GrassPoint p = point_from(model, n, matrix);
  if (p.k != k) throw ArgumentError("matrix has " + std::to_string(p.k) + " columns but k = " + std::to_string(k));
  const GrassPoint lim = flow_limit(p, f, dir);
  const auto d = component_membership(lim, f);
  const QMatrix canonical = column_span_basis(lim.basis);
  return {"flow limit",
          {{"model", model_name(model)},
           {"n", n},
           {"k", k},
           {"dir", dir == Direction::Zero ? "0" : "inf"},
           {"matrix", matrix}},
          {{"limit", matrix_to_json(canonical)}, {"component", to_json(d)}},
          "limit basis (columns):\n" + matrix_lines(canonical) + descriptor_line(d)};
}

ReportBundle flow_membership_bundle(Model model, int n, const nlohmann::json& matrix) {
  const FlowSpec f = flow_spec(model, n);
  const auto d = component_membership(point_from(model, n, matrix), f);
  return {"flow component", {{"model", model_name(model)}, {"n", n}, {"matrix", matrix}}, to_json(d),
          descriptor_line(d)};
}

ReportBundle chart_inverse_bundle(Model model, int n, const nlohmann::json& matrix) {
  const auto r = chart_inverse_check(matrix_from_json(matrix), model, n);
  std::string table;
  if (r.invertible)
    table = "source chart coordinate:\n" + matrix_lines(r.source_coordinate) +
            "equals the matrix inverse: " + (r.matches_inverse ? "yes" : "no") + "\n";
  else
    table = "indeterminacy: the matrix is singular\n";
  table += "limit at t -> inf: " + descriptor_line(r.source_limit);
  table += std::string("check: ") + (r.ok ? "pass" : "FAIL") + "\n";
  return {"flow chart-inverse", {{"model", model_name(model)}, {"n", n}, {"matrix", matrix}}, to_json(r), table};
}

std::vector<std::string> table_names() {
  return {"summary", "short", "balanced", "e7", "classical_A", "classical_B", "classical_C", "classical_D"};
}

ReportBundle table_bundle(const std::string& name, std::size_t orbit_cap) {
  if (name == "summary") return summary_table(orbit_cap);
  if (name == "short") return short_table();
  if (name == "balanced") return balanced_table();
  if (name == "e7") return e7_table(orbit_cap);
  if (name.rfind("classical_", 0) == 0 && name.size() == 11) return classical_table(parse_family(name[10]), orbit_cap);
  throw ArgumentError("unknown table '" + name + "'");
}

std::vector<std::filesystem::path> write_report_tables(const std::filesystem::path& out_dir,
                                                       std::size_t orbit_cap) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  auto write = [&](const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (os) os << text;
    if (!os) throw std::runtime_error(path.string() + ": " + std::strerror(errno));
    written.push_back(path);
  };
  for (const auto& name : table_names()) {
    const auto b = table_bundle(name, orbit_cap);
    write(out_dir / (name + ".txt"), b.table);
    write(out_dir / (name + ".json"), to_json(b).dump(2) + "\n");
  }
  return written;
}

}  // namespace cstar
