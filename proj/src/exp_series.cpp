#include "seriesforge/exp_series.hpp"

#include <array>
#include <utility>

namespace seriesforge {

namespace {

constexpr std::array<std::pair<std::string_view, NamedSeries>, 5> kNames{{
    {"exp_minus_one", NamedSeries::exp_minus_one},
    {"log1p", NamedSeries::log1p},
    {"neg_log_one_minus", NamedSeries::neg_log_one_minus},
    {"one_minus_exp_neg", NamedSeries::one_minus_exp_neg},
    {"identity", NamedSeries::identity},
}};

}  // namespace

NamedSeries parse_named_series(std::string_view name) {
  for (const auto& [text, value] : kNames) {
    if (text == name) return value;
  }
  throw std::invalid_argument("unknown named series '" + std::string(name) + "'");
}

std::string_view to_string(NamedSeries name) {
  for (const auto& [text, value] : kNames) {
    if (value == name) return text;
  }
  return "?";
}

}  // namespace seriesforge
