#include "demflag/json_io.hpp"

#include <stdexcept>
#include <string>

namespace demflag {

nlohmann::ordered_json qpoly_to_json(const QPolynomial& poly) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (const auto& [e, c] : poly.terms()) {
    coeffs[std::to_string(e)] = c.str();
  }
  nlohmann::ordered_json out;
  out["coeffs"] = std::move(coeffs);
  return out;
}

QPolynomial qpoly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object()) {
    throw std::invalid_argument("QPolynomial JSON: expected {\"coeffs\": {...}}");
  }
  QPolynomial poly;
  for (const auto& [key, value] : j["coeffs"].items()) {
    poly.add_term(BigInt(value.get<std::string>()), std::stoi(key));
  }
  return poly;
}

nlohmann::ordered_json xseries_to_json(const XSeries& series) {
  nlohmann::ordered_json out;
  out["order"] = series.order;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const QPolynomial& c : series.coefficients) {
    coeffs.push_back(qpoly_to_json(c));
  }
  out["x_coeffs"] = std::move(coeffs);
  return out;
}

XSeries xseries_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("x_coeffs") ||
      !j["x_coeffs"].is_array()) {
    throw std::invalid_argument("XSeries JSON: expected {\"order\": N, \"x_coeffs\": [...]}");
  }
  XSeries series;
  series.order = j["order"].get<int>();
  for (const auto& item : j["x_coeffs"]) {
    series.coefficients.push_back(qpoly_from_json(item));
  }
  if (static_cast<int>(series.coefficients.size()) != series.order + 1) {
    throw std::invalid_argument("XSeries JSON: coefficient count does not match order");
  }
  return series;
}

}  // namespace demflag
