#include "gfw/series.hpp"

#include "gfw/error.hpp"

namespace gfw {

TruncatedSeries::TruncatedSeries(FieldPtr field, int truncation) : field_(std::move(field)) {
  if (truncation < 1) throw DomainError("truncation must be positive");
  c_.assign(static_cast<std::size_t>(truncation), FieldElem::zero(field_));
}

TruncatedSeries::TruncatedSeries(FieldPtr field, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (c_.empty()) throw DomainError("truncation must be positive");
}

TruncatedSeries TruncatedSeries::constant(const FieldElem& c, int truncation) {
  return monomial(c, 0, truncation);
}

TruncatedSeries TruncatedSeries::monomial(const FieldElem& c, int e, int truncation) {
  TruncatedSeries s(c.field(), truncation);
  if (e < truncation) s[e] = c;
  return s;
}

std::optional<int> TruncatedSeries::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return std::nullopt;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (truncation() != o.truncation())
    throw DomainError("series truncations differ (" + std::to_string(truncation()) + " vs " +
                      std::to_string(o.truncation()) + ")");
  if (field_ != o.field_ && !field_->same_as(*o.field_)) throw FieldMismatch();
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  const int t = a.truncation();
  TruncatedSeries out(a.field_, t);
  const int oa = a.order().value_or(t);
  const int ob = b.order().value_or(t);
  for (int i = oa; i < t; ++i) {
    const FieldElem& ai = a[i];
    if (ai.is_zero()) continue;
    for (int j = ob; i + j < t; ++j) FieldElem::multiply_add(out[i + j], ai, b[j]);
  }
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const FieldElem& c) const {
  TruncatedSeries out = *this;
  for (auto& x : out.c_) x *= c;
  return out;
}

TruncatedSeries TruncatedSeries::shifted(int s) const {
  if (s < 0) throw DomainError("negative shift");
  TruncatedSeries out(field_, truncation());
  for (int i = 0; i + s < truncation(); ++i) out[i + s] = c_[static_cast<std::size_t>(i)];
  return out;
}

TruncatedSeries TruncatedSeries::spread(int stride, int truncation) const {
  if (stride < 1) throw DomainError("stride must be positive");
  TruncatedSeries out(field_, truncation);
  for (int i = 0; i < this->truncation() && i * stride < truncation; ++i)
    out[i * stride] = c_[static_cast<std::size_t>(i)];
  // Coefficients strictly between known multiples of the stride are zero.
  if (this->truncation() * stride < truncation)
    throw DomainError("series not known to the requested truncation");
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int truncation) const {
  if (truncation > this->truncation()) throw DomainError("cannot extend a truncated series");
  return TruncatedSeries(field_, std::vector<FieldElem>(c_.begin(), c_.begin() + truncation));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.truncation() == b.truncation() && a.c_ == b.c_;
}

TruncatedSeries int_pow(const TruncatedSeries& a, long e) {
  if (e < 0) throw DomainError("negative series exponent");
  TruncatedSeries result = TruncatedSeries::constant(FieldElem::one(a.field()), a.truncation());
  TruncatedSeries base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

namespace {

void require_unit_argument(const TruncatedSeries& u, int k) {
  if (k < 1) throw DomainError("root index must be positive");
  if (!u[0].is_zero()) throw DomainError("kth_root_one_plus needs u(0) = 0");
}

}  // namespace

TruncatedSeries kth_root_one_plus(const TruncatedSeries& u, int k) {
  require_unit_argument(u, k);
  const int t = u.truncation();
  const FieldPtr& field = u.field();
  TruncatedSeries y(field, t);
  y[0] = FieldElem::one(field);
  // m y_m = sum_{j=1}^{m} ((a+1) j - m) u_j y_{m-j}, a = 1/k.
  const Rational a(1, k);
  for (int m = 1; m < t; ++m) {
    FieldElem acc = FieldElem::zero(field);
    for (int j = 1; j <= m; ++j) {
      if (u[j].is_zero()) continue;
      const Rational w = (a + Rational(1)) * Rational(j) - Rational(m);
      if (w.is_zero()) continue;
      FieldElem::multiply_add(acc, u[j], y[m - j] * FieldElem(field, w));
    }
    y[m] = acc * FieldElem(field, Rational(1, m));
  }
  return y;
}

TruncatedSeries kth_root_one_plus_binomial(const TruncatedSeries& u, int k) {
  require_unit_argument(u, k);
  const int t = u.truncation();
  const FieldPtr& field = u.field();
  const Rational a(1, k);
  // Horner: c_0 + u (c_1 + u (c_2 + ...)), u^m vanishes beyond m = T-1.
  TruncatedSeries y = TruncatedSeries::constant(FieldElem(field, binomial(a, t - 1)), t);
  for (int m = t - 2; m >= 0; --m) {
    y = u * y;
    y[0] += FieldElem(field, binomial(a, m));
  }
  return y;
}

}  // namespace gfw
