#include "gfw/curve.hpp"

#include <numeric>
#include <sstream>

#include "gfw/error.hpp"

namespace gfw {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::int64_t choose(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

void check_kn(int k, int n) {
  if (k < 2 || n < 2) throw DomainError("need k >= 2 and n >= 2");
  // Keeps every closed form comfortably inside 64 bits.
  if (ipow(k, n - 1) > 1'000'000) throw DomainError("k^(n-1) too large (limit 10^6)");
}

void enumerate(int k, int nvars, int m, int pos, std::vector<int>& e, std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    if (pos >= 2 && m >= k) return;
    e[static_cast<std::size_t>(pos)] = m;
    out.push_back(Monomial{e});
    return;
  }
  const int cap = pos >= 2 ? std::min(m, k - 1) : m;
  for (int v = cap; v >= 0; --v) {
    e[static_cast<std::size_t>(pos)] = v;
    enumerate(k, nvars, m - v, pos + 1, e, out);
  }
  e[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

std::int64_t genus(int k, int n) {
  check_kn(k, n);
  return (ipow(k, n - 1) * ((n - 1) * (k - 1) - 2) + 2) / 2;
}

std::int64_t hilbert_coefficient(int k, int n, int m) {
  if (m < 0) return 0;
  std::int64_t total = 0;
  for (int i = 0; i <= n - 1; ++i) {
    const std::int64_t term = choose(n - 1, i) * choose(m - static_cast<std::int64_t>(i) * k + n, n);
    total += (i % 2 == 0) ? term : -term;
  }
  return total;
}

std::int64_t w_hat(int k, int n) {
  check_kn(k, n);
  const std::int64_t num = (k - 1) * (ipow(k, n - 1) - 2) * (ipow(k, n) + ipow(k, n - 1) - 12);
  if (num % 24 != 0) throw InternalError("weight bound is not an integer");
  return num / 24;
}

GFCurve::GFCurve(int k, int n, std::vector<FieldElem> lambda, FieldPtr field)
    : k_(k), n_(n), lambda_(std::move(lambda)), field_(std::move(field)) {
  eq_coeff_.assign(static_cast<std::size_t>(n_ + 1), FieldElem::zero(field_));
  if (n_ >= 2) eq_coeff_[2] = FieldElem::one(field_);
  for (int i = 3; i <= n_; ++i) eq_coeff_[static_cast<std::size_t>(i)] = lambda_[static_cast<std::size_t>(i - 3)];
}

GFCurve GFCurve::make_any_genus(int k, int n, std::vector<FieldElem> lambda, FieldPtr field) {
  check_kn(k, n);
  if (static_cast<int>(lambda.size()) != n - 2)
    throw DomainError("expected " + std::to_string(n - 2) + " lambda values, got " +
                      std::to_string(lambda.size()));
  for (auto& l : lambda) l = l.coerce(field);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i].is_zero() || lambda[i].is_one())
      throw DomainError("lambda not in P_n: lambda_" + std::to_string(i + 1) + " is " + lambda[i].to_string());
    for (std::size_t j = 0; j < i; ++j)
      if (lambda[i] == lambda[j])
        throw DomainError("lambda not in P_n: lambda_" + std::to_string(j + 1) + " = lambda_" +
                          std::to_string(i + 1));
  }
  return GFCurve(k, n, std::move(lambda), std::move(field));
}

GFCurve GFCurve::validate(int k, int n, std::vector<FieldElem> lambda) {
  FieldPtr field = lambda.empty() ? NumberField::rationals() : lambda.front().field();
  check_kn(k, n);
  if ((k - 1) * (n - 1) <= 2) throw DomainError("genus <= 1 unsupported");
  return make_any_genus(k, n, std::move(lambda), std::move(field));
}

GFCurve GFCurve::validate(int k, int n, const std::vector<Rational>& lambda, FieldPtr field) {
  check_kn(k, n);
  if ((k - 1) * (n - 1) <= 2) throw DomainError("genus <= 1 unsupported");
  std::vector<FieldElem> l;
  for (const auto& q : lambda) l.emplace_back(field, q);
  return make_any_genus(k, n, std::move(l), std::move(field));
}

std::int64_t GFCurve::degree() const { return ipow(k_, n_ - 1); }

std::pair<FieldElem, FieldElem> GFCurve::marking(int i) const {
  const FieldElem zero = FieldElem::zero(field_);
  const FieldElem one = FieldElem::one(field_);
  switch (i) {
    case 0: return {one, zero};
    case 1: return {zero, one};
    case 2: return {one, one};
    default: return {lambda_[static_cast<std::size_t>(i - 3)], one};
  }
}

GFCurve GFCurve::over(const FieldPtr& field) const {
  std::vector<FieldElem> l;
  for (const auto& x : lambda_) l.push_back(x.coerce(field));
  return GFCurve(k_, n_, std::move(l), field);
}

std::string GFCurve::describe() const {
  std::ostringstream os;
  os << "(k,n)=(" << k_ << "," << n_ << ") lambda=(";
  for (std::size_t i = 0; i < lambda_.size(); ++i) os << (i ? "," : "") << lambda_[i].to_string();
  os << ") over " << field_->describe();
  return os.str();
}

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

GradedBasis normal_form_monomials(int k, int nvars, int m) {
  GradedBasis b;
  b.m = m;
  if (m < 0) return b;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  enumerate(k, nvars, m, 0, e, b.monomials);
  return b;
}

GradedBasis monomial_basis(const GFCurve& curve, int m) {
  if (m < 0) throw DomainError("degree must be nonnegative");
  return normal_form_monomials(curve.k(), curve.n() + 1, m);
}

std::int64_t dim_gamma(const GFCurve& curve, int m) {
  return static_cast<std::int64_t>(monomial_basis(curve, m).size());
}

std::int64_t s_dim(const GFCurve& curve, int j) { return s_dim(curve.k(), curve.n(), j); }

std::int64_t s_dim(int k, int n, int j) {
  check_kn(k, n);
  if (j < 0 || j > k - 1) throw DomainError("j must lie in [0, k-1]");
  const std::int64_t twice = ipow(k, n - 2) * (n * (k - 1) - 2 - 2 * j);
  return twice / 2 + (j == k - 1 ? 1 : 0);
}

GradedBasis sub_basis_Q(const GFCurve& curve, int m, int j) {
  if (j < 0 || j > curve.k() - 1) throw DomainError("j must lie in [0, k-1]");
  if (m < j) return GradedBasis{m - j, {}};
  return normal_form_monomials(curve.k(), curve.n(), m - j);
}

std::int64_t h_prime(const GFCurve& curve, int m) {
  const int r = curve.canonical_twist();
  if (m < 0) return 0;
  if (m == 0) return 1;
  if (m == r) return curve.genus();
  if (m > r) return m * curve.degree() - curve.genus() + 1;
  return hilbert_coefficient(curve.k(), curve.n(), m);
}

GFCurve quotient_curve(const GFCurve& curve) {
  if (curve.n() < 3) throw DomainError("no quotient below the classic Fermat curve");
  std::vector<FieldElem> l(curve.lambda().begin(), curve.lambda().end() - 1);
  return GFCurve::make_any_genus(curve.k(), curve.n() - 1, std::move(l), curve.field());
}

}  // namespace gfw
