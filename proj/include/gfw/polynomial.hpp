#pragma once

#include <string>
#include <vector>

#include "gfw/rational.hpp"

namespace gfw {

/// Dense univariate polynomial over Q, coefficients in ascending powers.
/// The zero polynomial has no coefficients; the leading coefficient of a
/// nonzero polynomial is nonzero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }

  RatPoly monic() const;
  RatPoly derivative() const;
  Rational evaluate(const Rational& x) const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct PolyDivision {
  RatPoly quotient;
  RatPoly remainder;
};

PolyDivision divmod(const RatPoly& a, const RatPoly& b);

/// Monic gcd (zero if both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

struct ExtendedGcd {
  RatPoly g;  // monic
  RatPoly s;  // s*a + t*b = g
  RatPoly t;
};

ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b);

/// All rational roots, ascending, each listed once.
std::vector<Rational> rational_roots(const RatPoly& p);

}  // namespace gfw
