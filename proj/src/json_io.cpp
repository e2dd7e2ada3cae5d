#include "cstar/json_io.hpp"

#include "cstar/errors.hpp"

namespace cstar {

nlohmann::json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ArgumentError("rational entries must be \"p/q\" strings or integers");
}

nlohmann::json matrix_to_json(const QMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

QMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ArgumentError("matrix must be a nonempty array of rows");
  const std::size_t n = j.size();
  const std::size_t m = j[0].is_array() ? j[0].size() : 0;
  if (m == 0) throw ArgumentError("matrix rows must be nonempty arrays");
  QMatrix out(n, m);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != m) throw ArgumentError("matrix rows must have equal length");
    for (std::size_t c = 0; c < m; ++c) out(r, c) = rational_from_json(j[r][c]);
  }
  return out;
}

}  // namespace cstar
