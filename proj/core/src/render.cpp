#include "plmono/render.hpp"

#include <algorithm>
#include <sstream>

#include "plmono/error.hpp"

namespace plmono {

TableFormat parse_table_format(std::string_view name) {
  if (name == "text") return TableFormat::text;
  if (name == "json") return TableFormat::json;
  if (name == "csv") return TableFormat::csv;
  throw Error(ErrorKind::invalid_input, "unknown table format '" + std::string(name) + "'");
}

namespace {

std::size_t column_count(const EigenTable& t) {
  std::size_t cols = 1;
  for (const auto& [eta, dims] : t.entries()) cols = std::max(cols, dims.size());
  return cols;
}

std::string render_text(const EigenTable& t) {
  const std::size_t cols = column_count(t);
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"eta \\ j"};
  for (std::size_t j = 0; j < cols; ++j) header.push_back(std::to_string(j));
  grid.push_back(std::move(header));
  for (const auto& [eta, dims] : t.entries()) {
    std::vector<std::string> row{to_string(eta)};
    for (std::size_t j = 0; j < cols; ++j) row.push_back(std::to_string(dims[j]));
    grid.push_back(std::move(row));
  }

  std::vector<std::size_t> width(cols + 1, 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }

  std::ostringstream out;
  out << "dim H^j(F,C)_eta, degree " << t.degree() << "\n";
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << " | ";
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size(), ' ');
    }
    out << "\n";
  };
  emit(grid.front());
  for (std::size_t c = 0; c < width.size(); ++c) {
    if (c) out << "-+-";
    out << std::string(width[c], '-');
  }
  out << "\n";
  for (std::size_t r = 1; r < grid.size(); ++r) emit(grid[r]);
  return out.str();
}

std::string render_csv(const EigenTable& t) {
  const std::size_t cols = column_count(t);
  std::ostringstream out;
  out << "eigenvalue";
  for (std::size_t j = 0; j < cols; ++j) out << ",j" << j;
  out << "\n";
  for (const auto& [eta, dims] : t.entries()) {
    out << to_fraction_string(eta);
    for (std::size_t j = 0; j < cols; ++j) out << "," << dims[j];
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string render(const EigenTable& t, TableFormat format) {
  switch (format) {
    case TableFormat::text: return render_text(t);
    case TableFormat::json: return to_json(t).dump(2) + "\n";
    case TableFormat::csv: return render_csv(t);
  }
  return {};
}

nlohmann::json to_json(const GradedDims& g) {
  return nlohmann::json(std::vector<std::int64_t>(g.values().begin(), g.values().end()));
}

nlohmann::json to_json(const EigenTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [eta, dims] : t.entries()) {
    entries.push_back({{"eigenvalue", to_fraction_string(eta)}, {"dims", to_json(dims)}});
  }
  return {{"degree", t.degree()}, {"entries", std::move(entries)}};
}

EigenTable table_from_json(const nlohmann::json& j) {
  try {
    const auto degree = j.at("degree").get<std::int64_t>();
    EigenTable::Entries entries;
    for (const auto& e : j.at("entries")) {
      const RootOfUnity eta = parse_fraction(e.at("eigenvalue").get<std::string>());
      GradedDims dims(e.at("dims").get<std::vector<std::int64_t>>());
      if (!entries.emplace(eta, std::move(dims)).second) {
        throw Error(ErrorKind::invalid_table, "duplicate eigenvalue " + to_string(eta));
      }
    }
    return EigenTable(degree, std::move(entries));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::invalid_input, std::string("malformed table JSON: ") + ex.what());
  }
}

nlohmann::json to_json(const ZetaFunction& z) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [m, e] : z.exponents) pairs.push_back({m, e});
  return pairs;
}

nlohmann::json to_json(const CharPoly& p) { return nlohmann::json(p.coefficients()); }

}  // namespace plmono
