#include "hermia/charpoly.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hermia/errors.hpp"

namespace hermia {

CharPoly::CharPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty() || c_.back() != 1) throw std::invalid_argument("characteristic polynomial must be monic");
}

CharPoly CharPoly::mu_power(std::size_t k) {
  std::vector<BigInt> c(k + 1, BigInt(0));
  c[k] = 1;
  return CharPoly(std::move(c));
}

CharPoly CharPoly::from_integer_roots(const std::vector<long>& roots) {
  CharPoly p;
  for (long r : roots) p = p * CharPoly({BigInt(-r), BigInt(1)});
  return p;
}

std::size_t CharPoly::zero_valuation() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return k;
}

BigInt CharPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CharPoly CharPoly::shifted(const BigInt& a) const {
  // Repeated synthetic division (Taylor shift).
  std::vector<BigInt> c = c_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) c[j] += a * c[j + 1];
  }
  return CharPoly(std::move(c));
}

CharPoly CharPoly::reflected() const {
  std::vector<BigInt> c = c_;
  const std::size_t d = degree();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if ((d - k) % 2) c[k] = -c[k];
  }
  return CharPoly(std::move(c));
}

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return CharPoly(std::move(c));
}

std::pair<std::vector<BigInt>, std::vector<BigInt>> divide(const CharPoly& num, const CharPoly& den) {
  std::vector<BigInt> rem = num.coefficients();
  const std::size_t dd = den.degree();
  if (num.degree() < dd) return {{BigInt(0)}, rem};
  std::vector<BigInt> quo(num.degree() - dd + 1, BigInt(0));
  for (std::size_t k = quo.size(); k-- > 0;) {
    const BigInt q = rem[k + dd];
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * den[j];
  }
  rem.resize(dd == 0 ? 1 : dd);
  return {quo, rem};
}

bool divides(const CharPoly& den, const CharPoly& num) {
  const auto rem = divide(num, den).second;
  for (const auto& r : rem) {
    if (r != 0) return false;
  }
  return true;
}

std::size_t sign_changes(const std::vector<BigInt>& coeffs) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t roots_above(const CharPoly& p, const BigInt& a) {
  const CharPoly q = p.shifted(a);
  std::vector<BigInt> c = q.coefficients();
  const std::size_t zeros = q.zero_valuation();
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  return sign_changes(c);
}

std::vector<std::pair<BigInt, std::size_t>> integer_roots(const CharPoly& p) {
  std::vector<std::pair<BigInt, std::size_t>> out;
  std::vector<BigInt> c = p.coefficients();
  const std::size_t zeros = p.zero_valuation();
  if (zeros > 0) out.emplace_back(BigInt(0), zeros);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  if (c.size() <= 1) return out;

  // Any integer root divides the constant term.
  BigInt c0 = abs(c.front());
  std::vector<BigInt> candidates;
  for (BigInt d = 1; d * d <= c0; ++d) {
    if (c0 % d == 0) {
      candidates.push_back(d);
      if (d * d != c0) candidates.push_back(c0 / d);
    }
  }
  std::vector<BigInt> signed_candidates;
  for (const auto& d : candidates) {
    signed_candidates.push_back(d);
    signed_candidates.push_back(-d);
  }
  std::sort(signed_candidates.begin(), signed_candidates.end());

  CharPoly rest(c);
  for (const auto& r : signed_candidates) {
    std::size_t mult = 0;
    const CharPoly lin({-r, BigInt(1)});
    while (rest.degree() > 0 && rest.evaluate(r) == 0) {
      rest = CharPoly(divide(rest, lin).first);
      ++mult;
    }
    if (mult > 0) out.emplace_back(r, mult);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const CharPoly& p, const std::string& var) {
  std::ostringstream ss;
  bool first = true;
  for (std::size_t k = p.degree() + 1; k-- > 0;) {
    const BigInt& c = p[k];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) ss << '-';
    } else {
      ss << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) ss << mag.get_str();
    if (k >= 1) ss << var;
    if (k >= 2) ss << '^' << k;
  }
  if (first) ss << '0';
  return ss.str();
}

std::ostream& operator<<(std::ostream& os, const CharPoly& p) { return os << to_string(p); }

std::string to_json(const CharPoly& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : p.coefficients()) j.push_back(c.get_str());
  return j.dump();
}

CharPoly charpoly_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("characteristic polynomial JSON must be an array");
  std::vector<BigInt> c;
  for (const auto& e : j) {
    if (!e.is_string()) throw std::invalid_argument("coefficients must be decimal strings");
    BigInt v;
    if (v.set_str(e.get<std::string>(), 10) != 0) throw std::invalid_argument("bad decimal coefficient");
    c.push_back(v);
  }
  return CharPoly(std::move(c));
}

}  // namespace hermia
