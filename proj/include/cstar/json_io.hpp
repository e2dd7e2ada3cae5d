#pragma once

#include "cstar/rational.hpp"
#include "json.hpp"

namespace cstar {

/// Rationals travel as "p/q" strings; integers are accepted on input.
nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

/// Matrices travel as arrays of rows.
nlohmann::json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace cstar
