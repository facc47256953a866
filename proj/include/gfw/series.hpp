#pragma once

#include <optional>
#include <vector>

#include "gfw/number_field.hpp"

namespace gfw {

/// Power series in one variable known modulo z^T. The coefficient vector
/// always has exactly T entries.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// Zero series.
  TruncatedSeries(FieldPtr field, int truncation);
  /// Truncation is coeffs.size(); all entries must live in `field`.
  TruncatedSeries(FieldPtr field, std::vector<FieldElem> coeffs);

  static TruncatedSeries constant(const FieldElem& c, int truncation);
  /// c * z^e.
  static TruncatedSeries monomial(const FieldElem& c, int e, int truncation);

  const FieldPtr& field() const { return field_; }
  int truncation() const { return static_cast<int>(c_.size()); }
  const FieldElem& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  FieldElem& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<FieldElem>& coeffs() const { return c_; }

  /// Index of the first nonzero coefficient; empty means "order >= T".
  std::optional<int> order() const;
  bool is_zero() const { return !order().has_value(); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries scaled(const FieldElem& c) const;

  /// z^s * this, keeping the same truncation.
  TruncatedSeries shifted(int s) const;
  /// f(z^stride), truncated to `truncation` terms.
  TruncatedSeries spread(int stride, int truncation) const;
  /// Same series known to fewer terms.
  TruncatedSeries truncated(int truncation) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  void check_compatible(const TruncatedSeries& o) const;

  FieldPtr field_;
  std::vector<FieldElem> c_;
};

TruncatedSeries int_pow(const TruncatedSeries& a, long e);

/// (1+u)^(1/k) for u with zero constant term, normalised to value 1 at 0.
/// Uses the linear recurrence from (1+u) y' = (1/k) u' y, which costs O(T^2).
TruncatedSeries kth_root_one_plus(const TruncatedSeries& u, int k);

/// Same result through the binomial sum of C(1/k, m) u^m evaluated by Horner's
/// rule. O(T^3); kept as a reference for tests.
TruncatedSeries kth_root_one_plus_binomial(const TruncatedSeries& u, int k);

}  // namespace gfw
