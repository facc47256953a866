#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gfw/number_field.hpp"

namespace gfw {

/// Genus of a type (k,n) curve. Defined for all k, n >= 2 (it is 0 for the
/// conic (2,2) and 1 when (k-1)(n-1) = 2).
std::int64_t genus(int k, int n);

/// Coefficient of t^m in (1-t^k)^(n-1) / (1-t)^(n+1).
std::int64_t hilbert_coefficient(int k, int n, int m);

/// Closed form (k-1)(k^(n-1)-2)(k^n+k^(n-1)-12)/24 of the weight bound.
std::int64_t w_hat(int k, int n);

/// x_0^k + x_1^k + x_2^k = 0,  lambda_{i-2} x_0^k + x_1^k + x_i^k = 0 (3 <= i <= n).
class GFCurve {
 public:
  /// Checks the parameter space condition and (k-1)(n-1) > 2.
  static GFCurve validate(int k, int n, std::vector<FieldElem> lambda);
  static GFCurve validate(int k, int n, const std::vector<Rational>& lambda,
                          FieldPtr field = NumberField::rationals());
  /// Same checks on lambda but any genus. Used for quotient curves, which can
  /// be elliptic.
  static GFCurve make_any_genus(int k, int n, std::vector<FieldElem> lambda, FieldPtr field);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<FieldElem>& lambda() const { return lambda_; }
  const FieldPtr& field() const { return field_; }

  std::int64_t genus() const { return gfw::genus(k_, n_); }
  /// Degree of the twist O(r) that is the canonical sheaf.
  int canonical_twist() const { return (n_ - 1) * (k_ - 1) - 2; }
  std::int64_t degree() const;
  std::int64_t fixed_points_per_axis() const { return degree(); }
  std::int64_t fixed_point_count() const { return (n_ + 1) * degree(); }
  bool hyperbolic() const { return (k_ - 1) * (n_ - 1) > 2; }

  /// Coefficient of x_0^k in the equation for x_i (i >= 2): 1 for i = 2,
  /// lambda_{i-2} otherwise.
  const FieldElem& equation_coeff(int i) const { return eq_coeff_[static_cast<std::size_t>(i)]; }

  /// Marking gamma_i in P^1 as [u : v]: infinity, 0, 1, lambda_1, ...
  std::pair<FieldElem, FieldElem> marking(int i) const;

  /// Same curve with the parameters viewed in a larger field.
  GFCurve over(const FieldPtr& field) const;

  std::string describe() const;

 private:
  GFCurve(int k, int n, std::vector<FieldElem> lambda, FieldPtr field);

  int k_ = 0;
  int n_ = 0;
  std::vector<FieldElem> lambda_;
  FieldPtr field_;
  std::vector<FieldElem> eq_coeff_;
};

struct Monomial {
  std::vector<int> e;
  int degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct GradedBasis {
  int m = 0;
  std::vector<Monomial> monomials;
  std::size_t size() const { return monomials.size(); }
};

/// Degree-m monomials in x_0..x_nvars-1 with e_i < k for i >= 2, in
/// descending lexicographic order of exponent vectors (x_0^m first).
GradedBasis normal_form_monomials(int k, int nvars, int m);

GradedBasis monomial_basis(const GFCurve& curve, int m);
std::int64_t dim_gamma(const GFCurve& curve, int m);

/// Dimension of the summand x_n^j Q(r-j) of the canonical space.
std::int64_t s_dim(const GFCurve& curve, int j);
std::int64_t s_dim(int k, int n, int j);

/// Basis of Q(m-j): normal-form monomials of degree m-j in x_0..x_{n-1}.
/// Exponent vectors have n entries, i.e. they are monomials on the quotient
/// curve. Empty when m < j.
GradedBasis sub_basis_Q(const GFCurve& curve, int m, int j);

/// h^0(O(m)) on `curve` from Riemann-Roch, with omega = O(r). Falls back to
/// the Hilbert function in the range 0 < m < r where Riemann-Roch alone does
/// not determine it.
std::int64_t h_prime(const GFCurve& curve, int m);

/// The type (k, n-1) curve with parameters lambda_1..lambda_{n-3}.
GFCurve quotient_curve(const GFCurve& curve);

}  // namespace gfw
