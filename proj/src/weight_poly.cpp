#include "seriesforge/weight_poly.hpp"

#include <sstream>
#include <stdexcept>

#include "seriesforge/series_json.hpp"

namespace seriesforge {

ColorDegree ColorDegree::make(int color, int degree) {
  if (color < 1) throw std::invalid_argument("color must be >= 1, got " + std::to_string(color));
  if (degree < 2) throw std::invalid_argument("out-degree must be >= 2, got " + std::to_string(degree));
  return ColorDegree{color, degree};
}

Monomial Monomial::variable(ColorDegree v, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

unsigned Monomial::degree_mass() const {
  unsigned mass = 0;
  for (const auto& [v, e] : factors_) mass += e * static_cast<unsigned>(v.degree - 1);
  return mass;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : factors_) {
    if (!first) os << '*';
    first = false;
    os << "x_{" << v.color << ',' << v.degree << '}';
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

WeightPoly::WeightPoly(const BigInt& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

WeightPoly WeightPoly::variable(ColorDegree v) { return term(BigInt(1), Monomial::variable(v)); }

WeightPoly WeightPoly::term(const BigInt& coeff, Monomial monomial) {
  WeightPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(std::move(monomial), coeff);
  return p;
}

std::optional<BigInt> WeightPoly::constant_value() const {
  if (terms_.empty()) return BigInt(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

BigInt WeightPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt WeightPoly::evaluate(const std::function<BigInt(ColorDegree)>& value) const {
  BigInt total(0);
  for (const auto& [m, c] : terms_) {
    BigInt prod = c;
    for (const auto& [v, e] : m.factors()) prod *= pow(value(v), e);
    total += prod;
  }
  return total;
}

std::string WeightPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    const BigInt mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag;
    } else {
      if (mag != BigInt(1)) os << mag << '*';
      os << m.to_string();
    }
  }
  return os.str();
}

void WeightPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeightPoly& WeightPoly::operator-=(const WeightPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeightPoly operator-(const WeightPoly& a) {
  WeightPoly out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

WeightPoly operator*(const WeightPoly& a, const WeightPoly& b) {
  WeightPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

WeightPoly weight_var(int color, int degree) { return WeightPoly::variable(ColorDegree::make(color, degree)); }

nlohmann::json to_json(const WeightPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& [v, e] : m.factors()) factors.push_back({v.color, v.degree, e});
    out.push_back({{"coeff", integer_to_json(c)}, {"monomial", factors}});
  }
  return out;
}

WeightPoly weight_poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("WeightPoly JSON must be an array");
  WeightPoly out;
  for (const auto& entry : j) {
    Monomial m;
    for (const auto& f : entry.at("monomial")) {
      m = m * Monomial::variable(ColorDegree::make(f.at(0).get<int>(), f.at(1).get<int>()),
                                 f.at(2).get<unsigned>());
    }
    out += WeightPoly::term(integer_from_json(entry.at("coeff")), std::move(m));
  }
  return out;
}

}  // namespace seriesforge
