#include "seriesforge/series_json.hpp"

#include <stdexcept>
#include <string>

namespace seriesforge {

namespace {

const BigInt& max_safe_integer() {
  static const BigInt v("9007199254740991");
  return v;
}

}  // namespace

nlohmann::json integer_to_json(const BigInt& value) {
  if (abs(value) <= max_safe_integer()) return value.to_int64();
  return value.to_string();
}

BigInt integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer or decimal string, got " + j.dump());
}

nlohmann::json to_json(const ExpSeries<BigRational>& series) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::size_t n = 1; n <= series.order(); ++n) coeffs.push_back(series.coeff(n).to_string());
  return {{"order", series.order()}, {"constant", series.constant_term().to_string()}, {"coeffs", coeffs}};
}

ExpSeries<BigRational> series_from_json(const nlohmann::json& j) {
  const auto order = j.at("order").get<std::size_t>();
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || coeffs.size() != order) {
    throw std::invalid_argument("series JSON: expected " + std::to_string(order) + " coefficients");
  }
  std::vector<BigRational> c{j.contains("constant") ? BigRational(j.at("constant").get<std::string>())
                                                    : BigRational(0)};
  for (const auto& entry : coeffs) c.emplace_back(entry.get<std::string>());
  return ExpSeries<BigRational>(std::move(c));
}

}  // namespace seriesforge
