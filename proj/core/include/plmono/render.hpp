#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "plmono/arrangement.hpp"
#include "plmono/eigencalc.hpp"
#include "plmono/zeta.hpp"

namespace plmono {

enum class TableFormat { text, json, csv };

TableFormat parse_table_format(std::string_view name);

/// Deterministic rendering; rows are ordered by (denominator, numerator) and
/// columns by cohomological degree.
///   text: the "eta \ j" grid, one row per eigenvalue.
///   json: {"degree": r, "entries": [{"eigenvalue": "k/n", "dims": [...]}]}
///   csv:  header "eigenvalue,j0,j1,..." then one "k/n,d0,d1,..." row per eigenvalue.
std::string render(const EigenTable& t, TableFormat format);

nlohmann::json to_json(const EigenTable& t);
/// Validates through the EigenTable constructor; malformed documents throw
/// ErrorKind::invalid_input or ErrorKind::invalid_table.
EigenTable table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GradedDims& g);
/// Sorted [m, e] pairs, meaning prod (1 - t^m)^e. Exponents follow the
/// convention zeta(t) = prod_j det(I - t T | H^j)^{(-1)^{j+1}}.
nlohmann::json to_json(const ZetaFunction& z);
nlohmann::json to_json(const CharPoly& p);

}  // namespace plmono
