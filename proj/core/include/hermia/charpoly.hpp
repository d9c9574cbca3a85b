#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hermia/gaussian.hpp"

namespace hermia {

/// Monic integer polynomial sum_k c_k mu^k, stored low to high degree.
/// Used for characteristic polynomials det(mu I - H).
class CharPoly {
 public:
  /// The constant polynomial 1.
  CharPoly() : c_{BigInt(1)} {}
  /// Throws std::invalid_argument unless the leading coefficient is 1.
  explicit CharPoly(std::vector<BigInt> coeffs_low_to_high);

  static CharPoly mu_power(std::size_t k);
  static CharPoly from_integer_roots(const std::vector<long>& roots);

  std::size_t degree() const { return c_.size() - 1; }
  const BigInt& operator[](std::size_t k) const { return c_[k]; }
  const std::vector<BigInt>& coefficients() const { return c_; }

  /// Largest k with mu^k dividing the polynomial (multiplicity of root 0).
  std::size_t zero_valuation() const;

  BigInt evaluate(const BigInt& x) const;
  /// p(mu + a).
  CharPoly shifted(const BigInt& a) const;
  /// (-1)^deg p(-mu), kept monic.
  CharPoly reflected() const;

  friend CharPoly operator*(const CharPoly& a, const CharPoly& b);
  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  std::vector<BigInt> c_;
};

/// Quotient and remainder of division by a monic divisor.
std::pair<std::vector<BigInt>, std::vector<BigInt>> divide(const CharPoly& num, const CharPoly& den);
bool divides(const CharPoly& den, const CharPoly& num);

/// Number of sign changes in the nonzero coefficients. For a real-rooted
/// polynomial this is exactly the number of positive roots.
std::size_t sign_changes(const std::vector<BigInt>& coeffs);

/// Count of roots strictly greater than `a`; exact for real-rooted p.
std::size_t roots_above(const CharPoly& p, const BigInt& a);

/// Integer roots with multiplicities, ascending.
std::vector<std::pair<BigInt, std::size_t>> integer_roots(const CharPoly& p);

/// Human form, e.g. "mu^4 - 6mu^2 + 8mu - 3".
std::string to_string(const CharPoly& p, const std::string& var = "mu");
std::ostream& operator<<(std::ostream& os, const CharPoly& p);

/// JSON array of decimal strings, low to high degree: ["-3","8","-6","0","1"].
std::string to_json(const CharPoly& p);
CharPoly charpoly_from_json(const std::string& json);

}  // namespace hermia
