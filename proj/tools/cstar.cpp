#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cstar/errors.hpp"
#include "cstar/report.hpp"
#include "cstar/weyl.hpp"

namespace {

enum Exit { kOk = 0, kFailure = 1, kArgument = 2, kPrecondition = 3, kResource = 4 };

std::size_t orbit_cap() {
  const char* env = std::getenv("CSTAR_ORBIT_CAP");
  if (env == nullptr || *env == '\0') return cstar::kDefaultOrbitCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw cstar::ArgumentError(std::string("CSTAR_ORBIT_CAP must be a positive integer, got '") + env + "'");
  return static_cast<std::size_t>(v);
}

// A JSON argument, given inline or as @path.
nlohmann::json json_argument(const std::string& text, const char* what) {
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw cstar::ArgumentError(std::string("cannot read ") + what + " file '" + text.substr(1) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw cstar::ArgumentError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

cstar::Family family_argument(const std::string& s) {
  if (s.size() != 1) throw cstar::ArgumentError("family must be one of A B C D E F G, got '" + s + "'");
  return cstar::parse_family(static_cast<char>(std::toupper(static_cast<unsigned char>(s[0]))));
}

struct Format {
  bool json = false;
  bool table = false;
};

void add_format(CLI::App* cmd, Format& f) {
  auto* j = cmd->add_flag("--json", f.json, "print the result as JSON");
  auto* t = cmd->add_flag("--table", f.table, "print the result as a text table (default)");
  j->excludes(t);
}

void emit(const cstar::ReportBundle& b, const Format& f) {
  if (f.json)
    std::cout << cstar::to_json(b).dump(2) << "\n";
  else
    std::cout << b.table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torus actions on rational homogeneous varieties: gradings, fixed points, Jordan inversions"};
  app.require_subcommand(1);

  Format fmt;
  std::string family;
  int rank_min = 0, rank_max = 0, rank = 0, node_i = 0, node_k = 0;

  auto* gradings = app.add_subcommand("gradings", "classify the gradings sigma_i over a rank range");
  gradings->add_option("family", family, "Dynkin family letter")->required();
  gradings->add_option("rank_min", rank_min)->required();
  gradings->add_option("rank_max", rank_max)->required();
  add_format(gradings, fmt);

  auto* fixed = app.add_subcommand("fixed-points", "fixed components of the H_i-action on D(k)");
  fixed->add_option("family", family, "Dynkin family letter")->required();
  fixed->add_option("rank", rank)->required();
  fixed->add_option("i", node_i, "node of the grading")->required();
  fixed->add_option("k", node_k, "marked node of the variety")->required();
  add_format(fixed, fmt);

  std::string out_dir;
  auto* tables = app.add_subcommand("report-tables", "regenerate the reference tables as .txt and .json files");
  tables->add_option("out_dir", out_dir)->required();

  auto* jordan = app.add_subcommand("jordan", "Jordan algebra inversion");
  jordan->require_subcommand(1);
  std::string element, scalar = "2";
  std::string jordan_op;
  for (const char* op : {"invert", "cremona", "check"}) {
    auto* sub = jordan->add_subcommand(op, std::string(op) + " an element");
    sub->add_option("--element", element, "element as JSON, or @file")->required();
    if (std::string(op) == "check") sub->add_option("--t", scalar, "scalar for the homogeneity check")->capture_default_str();
    add_format(sub, fmt);
    sub->callback([&jordan_op, op] { jordan_op = op; });
  }

  auto* flow = app.add_subcommand("flow", "matrix models of the classical actions");
  flow->require_subcommand(1);
  std::string model, dir, matrix;
  int n = 0, k = 0;
  auto* limit = flow->add_subcommand("limit", "limit of a subspace under the flow");
  limit->add_option("--model", model, "A, B, C, D or Dq")->required();
  limit->add_option("--n", n)->required();
  limit->add_option("--k", k)->required();
  limit->add_option("--dir", dir, "0 or inf")->required()->check(CLI::IsMember({"0", "inf"}));
  limit->add_option("--matrix", matrix, "basis columns as JSON rows, or @file")->required();
  add_format(limit, fmt);
  auto* chart = flow->add_subcommand("chart-inverse", "compare the source chart of span[I; B] with B^-1");
  chart->add_option("--model", model, "A, C or D")->required();
  chart->add_option("--n", n)->required();
  chart->add_option("--matrix", matrix, "B as JSON rows, or @file")->required();
  add_format(chart, fmt);
  auto* component = flow->add_subcommand("component", "fixed component through a fixed subspace");
  component->add_option("--model", model, "A, B, C, D or Dq")->required();
  component->add_option("--n", n)->required();
  component->add_option("--matrix", matrix, "basis columns as JSON rows, or @file")->required();
  add_format(component, fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kArgument;
  }

  try {
    const std::size_t cap = orbit_cap();
    if (gradings->parsed()) {
      emit(cstar::gradings_bundle(family_argument(family), rank_min, rank_max), fmt);
    } else if (fixed->parsed()) {
      emit(cstar::fixed_points_bundle(family_argument(family), rank, node_i, node_k, cap), fmt);
    } else if (tables->parsed()) {
      for (const auto& path : cstar::write_report_tables(out_dir, cap)) std::cout << path.string() << "\n";
    } else if (jordan->parsed()) {
      emit(cstar::jordan_bundle(jordan_op, json_argument(element, "element"), cstar::parse_rational(scalar)), fmt);
    } else if (limit->parsed()) {
      emit(cstar::flow_limit_bundle(cstar::parse_model(model), n, k,
                                    dir == "0" ? cstar::Direction::Zero : cstar::Direction::Infinity,
                                    json_argument(matrix, "matrix")),
           fmt);
    } else if (chart->parsed()) {
      emit(cstar::chart_inverse_bundle(cstar::parse_model(model), n, json_argument(matrix, "matrix")), fmt);
    } else if (component->parsed()) {
      emit(cstar::flow_membership_bundle(cstar::parse_model(model), n, json_argument(matrix, "matrix")), fmt);
    }
  } catch (const cstar::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kArgument;
  } catch (const cstar::SingularError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const cstar::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const cstar::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
