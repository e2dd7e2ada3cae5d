#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cstar/grassflow.hpp"
#include "cstar/rootcore.hpp"
#include "json.hpp"

namespace cstar {

/// What a CLI command produces: an echo of the command and its inputs, the
/// result as JSON, and a plain-text rendering of the same result.
struct ReportBundle {
  std::string command;
  nlohmann::json params;
  nlohmann::json payload;
  std::string table;
};

/// {"command": ..., "params": ..., "result": payload}
nlohmann::json to_json(const ReportBundle& b);

ReportBundle gradings_bundle(Family family, int rank_min, int rank_max);
ReportBundle fixed_points_bundle(Family family, int rank, int i, int k, std::size_t orbit_cap);

/// op is "invert", "cremona" or "check"; `t` is the scalar for the
/// homogeneity test of "check".
ReportBundle jordan_bundle(const std::string& op, const nlohmann::json& element, const Rational& t);

ReportBundle flow_limit_bundle(Model model, int n, int k, Direction dir, const nlohmann::json& matrix);
ReportBundle flow_membership_bundle(Model model, int n, const nlohmann::json& matrix);
ReportBundle chart_inverse_bundle(Model model, int n, const nlohmann::json& matrix);

/// The named tables regenerated by `report-tables`, each as a bundle:
/// "summary", "short", "balanced", "e7", "classical_A" .. "classical_D".
std::vector<std::string> table_names();
ReportBundle table_bundle(const std::string& name, std::size_t orbit_cap);

/// Writes <name>.txt and <name>.json for every table; returns the paths.
/// I/O failures raise std::runtime_error carrying the system message.
std::vector<std::filesystem::path> write_report_tables(const std::filesystem::path& out_dir,
                                                       std::size_t orbit_cap);

}  // namespace cstar
