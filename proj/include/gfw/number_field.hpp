#pragma once

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gfw/polynomial.hpp"
#include "gfw/rational.hpp"

namespace gfw {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// A simple extension Q[t]/(m) given by a monic modulus m of degree d >= 1.
/// Degree 1 is the rational field itself.
///
/// Construction checks that m is squarefree and, for d > 1, that it has no
/// rational root. Irreducibility beyond that is the caller's promise; an
/// inversion that exposes a factor of m throws ReducibleModulus.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Q, represented with modulus t.
  static FieldPtr rationals();
  /// Modulus coefficients in ascending powers; the leading one is scaled to 1.
  static FieldPtr create(std::vector<Rational> modulus);
  /// Only squarefreeness is checked. Used to exercise the reducible-modulus
  /// diagnostics.
  static FieldPtr create_unchecked(std::vector<Rational> modulus);

  int degree() const { return modulus_.degree(); }
  bool is_rationals() const { return degree() == 1; }
  const RatPoly& modulus() const { return modulus_; }
  bool same_as(const NumberField& other) const {
    return this == &other || modulus_ == other.modulus_;
  }

  /// Basis coordinates of t^j for d <= j <= 2d-2.
  const std::vector<Rational>& power_row(int j) const {
    return reduction_[static_cast<std::size_t>(j - degree())];
  }

  /// Complex roots of the modulus, computed numerically. Only for candidate
  /// searches and sanity checks.
  const std::vector<std::complex<long double>>& complex_roots() const;

  std::string describe() const;

 private:
  explicit NumberField(RatPoly modulus);

  RatPoly modulus_;
  std::vector<std::vector<Rational>> reduction_;
  mutable std::vector<std::complex<long double>> roots_;
  mutable bool roots_ready_ = false;
};

/// Element of a NumberField in the power basis 1, t, ..., t^(d-1). The
/// representation is unique, so equality is coordinatewise.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr field, std::vector<Rational> coeffs);
  FieldElem(FieldPtr field, const Rational& q);

  static FieldElem zero(FieldPtr field) { return FieldElem(std::move(field), Rational(0)); }
  static FieldElem one(FieldPtr field) { return FieldElem(std::move(field), Rational(1)); }
  static FieldElem generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  std::span<const Rational> coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws DomainError unless is_rational().
  const Rational& as_rational() const;

  FieldElem inverse() const;
  FieldElem pow(long e) const;
  /// Same value in another field; only rational values can move between
  /// different fields.
  FieldElem coerce(const FieldPtr& target) const;

  std::complex<long double> evaluate(std::complex<long double> t) const;
  std::string to_string() const;
  std::vector<std::string> to_strings() const;

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o) { return *this *= o.inverse(); }
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  FieldElem operator-() const;

  /// acc += a * b without building the intermediate product element.
  static void multiply_add(FieldElem& acc, const FieldElem& a, const FieldElem& b);

  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  void check_same(const FieldElem& o) const;

  FieldPtr field_;
  std::vector<Rational> c_;
};

/// Lexicographic comparison on coordinates; a total order used only to make
/// outputs deterministic.
bool lex_less(const FieldElem& a, const FieldElem& b);

/// All y in the field with y^k = a, sorted by lex_less.
///
/// Over Q the search is exact. Over extensions, candidates come from the
/// complex embeddings (rational reconstruction of the power-basis
/// coordinates) and every returned root is verified exactly, so the result
/// never contains a false root; roots whose coordinates have very large
/// denominators could be missed.
std::vector<FieldElem> kth_roots(const FieldElem& a, int k);

}  // namespace gfw
