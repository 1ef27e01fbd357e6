#include "gvkit/series_json.hpp"

#include <string>

#include "gvkit/error.hpp"

namespace gvkit {

namespace {

template <typename T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing JSON field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

}  // namespace

nlohmann::json series_to_json(const LaurentSeries& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_string(c));
  return {{"variable", std::string(variable_name(f.variable()))},
          {"min_exp", f.min_exp()},
          {"trunc", f.trunc()},
          {"coeffs", std::move(coeffs)}};
}

LaurentSeries series_from_json(const nlohmann::json& j) {
  const Variable var = parse_variable(field<std::string>(j, "variable"));
  const int min_exp = field<int>(j, "min_exp");
  const int trunc = field<int>(j, "trunc");
  std::vector<Rational> coeffs;
  for (const auto& c : field<std::vector<std::string>>(j, "coeffs")) coeffs.push_back(parse_rational(c));
  try {
    return {var, min_exp, std::move(coeffs), trunc};
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json bivariate_to_json(const BivariateSeries& f) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : f.blocks()) blocks.push_back(series_to_json(b));
  return {{"secondary", std::string(variable_name(f.secondary()))},
          {"t_trunc", f.t_trunc()},
          {"blocks", std::move(blocks)}};
}

BivariateSeries bivariate_from_json(const nlohmann::json& j) {
  const Variable secondary = parse_variable(field<std::string>(j, "secondary"));
  const int t_trunc = field<int>(j, "t_trunc");
  const auto& raw = j.at("blocks");
  if (!raw.is_array() || static_cast<int>(raw.size()) != t_trunc + 1) {
    throw ParseError("bivariate JSON needs exactly t_trunc + 1 blocks");
  }
  std::vector<LaurentSeries> blocks;
  for (const auto& b : raw) blocks.push_back(series_from_json(b));
  return {secondary, std::move(blocks)};
}

}  // namespace gvkit
