#include "gfw/number_field.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include "gfw/error.hpp"

namespace gfw {

namespace {

using cplx = std::complex<long double>;

RatPoly normalize_modulus(std::vector<Rational> coeffs) {
  RatPoly m(std::move(coeffs));
  if (m.degree() < 1) throw DomainError("number field modulus must have degree >= 1");
  return m.monic();
}

void check_squarefree(const RatPoly& m) {
  if (gcd(m, m.derivative()).degree() > 0)
    throw DomainError("number field modulus " + m.to_string() + " is not squarefree");
}

// Durand-Kerner iteration followed by Newton polishing.
std::vector<cplx> polynomial_roots(const RatPoly& m) {
  const int d = m.degree();
  std::vector<cplx> coeff(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) coeff[static_cast<std::size_t>(i)] = m.coeff(i).to_long_double();
  auto eval = [&](cplx z) {
    cplx acc = 0;
    for (int i = d; i >= 0; --i) acc = acc * z + coeff[static_cast<std::size_t>(i)];
    return acc;
  };
  auto deriv = [&](cplx z) {
    cplx acc = 0;
    for (int i = d; i >= 1; --i) acc = acc * z + coeff[static_cast<std::size_t>(i)] * static_cast<long double>(i);
    return acc;
  };
  long double bound = 1;
  for (int i = 0; i < d; ++i) bound = std::max(bound, 1 + std::abs(coeff[static_cast<std::size_t>(i)]));
  std::vector<cplx> z(static_cast<std::size_t>(d));
  const cplx seed(0.4L, 0.9L);
  for (int i = 0; i < d; ++i) z[static_cast<std::size_t>(i)] = std::pow(seed, i) * (bound / 2);
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (int i = 0; i < d; ++i) {
      cplx den = 1;
      for (int j = 0; j < d; ++j)
        if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      const cplx step = eval(z[static_cast<std::size_t>(i)]) / den;
      z[static_cast<std::size_t>(i)] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L) break;
  }
  for (auto& r : z) {
    for (int iter = 0; iter < 5; ++iter) {
      const cplx dv = deriv(r);
      if (std::abs(dv) == 0) break;
      r -= eval(r) / dv;
    }
  }
  return z;
}

// Best rational approximation with denominator <= max_den, if it is within tol.
bool reconstruct(long double x, long double tol, long max_den, Rational& out) {
  long double frac = x;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const long double fl = std::floor(frac);
    if (std::abs(fl) > 1e15L) return false;
    const long a = static_cast<long>(fl);
    const long p2 = a * p1 + p0;
    const long q2 = a * q1 + q0;
    if (q2 > max_den) return false;
    if (std::abs(x - static_cast<long double>(p2) / q2) <= tol) {
      out = Rational(p2, q2);
      return true;
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const long double rest = frac - fl;
    if (rest == 0) return false;
    frac = 1 / rest;
  }
  return false;
}

// Solve V c = y for the Vandermonde system V_{ji} = t_j^i (complex Gauss).
std::vector<cplx> solve_vandermonde(const std::vector<cplx>& t, std::vector<cplx> y) {
  const std::size_t d = t.size();
  std::vector<std::vector<cplx>> a(d, std::vector<cplx>(d));
  for (std::size_t j = 0; j < d; ++j) {
    cplx p = 1;
    for (std::size_t i = 0; i < d; ++i) {
      a[j][i] = p;
      p *= t[j];
    }
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < d; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(y[col], y[piv]);
    for (std::size_t r = col + 1; r < d; ++r) {
      const cplx f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < d; ++c) a[r][c] -= f * a[col][c];
      y[r] -= f * y[col];
    }
  }
  std::vector<cplx> x(d);
  for (std::size_t r = d; r-- > 0;) {
    cplx s = y[r];
    for (std::size_t c = r + 1; c < d; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

std::vector<FieldElem> rational_kth_roots(const FieldElem& a, int k) {
  const Rational& q = a.as_rational();
  if (q.is_zero()) return {a};
  if (q.sign() < 0 && k % 2 == 0) return {};
  mpz_class rn, rd;
  const mpz_class an = abs(q.num());
  if (mpz_root(rn.get_mpz_t(), an.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return {};
  if (mpz_root(rd.get_mpz_t(), q.den().get_mpz_t(), static_cast<unsigned long>(k)) == 0) return {};
  Rational r(mpq_class(rn, rd));
  if (q.sign() < 0) r = -r;
  std::vector<FieldElem> out{FieldElem(a.field(), r)};
  if (k % 2 == 0) out.emplace_back(a.field(), -r);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

NumberField::NumberField(RatPoly modulus) : modulus_(std::move(modulus)) {
  const int d = degree();
  // Rows for t^d .. t^(2d-2).
  std::vector<Rational> row(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) row[static_cast<std::size_t>(i)] = -modulus_.coeff(i);
  for (int j = d; j <= 2 * d - 2 || j == d; ++j) {
    reduction_.push_back(row);
    // multiply row by t
    std::vector<Rational> next(static_cast<std::size_t>(d));
    const Rational top = row[static_cast<std::size_t>(d - 1)];
    for (int i = d - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i - 1)];
    for (int i = 0; i < d; ++i) next[static_cast<std::size_t>(i)] -= top * modulus_.coeff(i);
    row = std::move(next);
  }
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q(new NumberField(RatPoly(std::vector<Rational>{Rational(0), Rational(1)})));
  return q;
}

FieldPtr NumberField::create(std::vector<Rational> modulus) {
  RatPoly m = normalize_modulus(std::move(modulus));
  check_squarefree(m);
  if (m.degree() == 1) {
    if (m.coeff(0).is_zero()) return rationals();
    return FieldPtr(new NumberField(std::move(m)));
  }
  const auto roots = rational_roots(m);
  if (!roots.empty())
    throw DomainError("number field modulus " + m.to_string() + " has the rational root " +
                      roots.front().to_string());
  return FieldPtr(new NumberField(std::move(m)));
}

FieldPtr NumberField::create_unchecked(std::vector<Rational> modulus) {
  RatPoly m = normalize_modulus(std::move(modulus));
  check_squarefree(m);
  if (m.degree() == 1 && m.coeff(0).is_zero()) return rationals();
  return FieldPtr(new NumberField(std::move(m)));
}

const std::vector<std::complex<long double>>& NumberField::complex_roots() const {
  // Fields are shared across threads; compute once up front.
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (!roots_ready_) {
    roots_ = polynomial_roots(modulus_);
    roots_ready_ = true;
  }
  return roots_;
}

std::string NumberField::describe() const {
  if (is_rationals() && modulus_.coeff(0).is_zero()) return "Q";
  return "Q[t]/(" + modulus_.to_string() + ")";
}

FieldElem::FieldElem(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  const int d = field_->degree();
  c_.assign(static_cast<std::size_t>(d), Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    const int e = static_cast<int>(i);
    if (e < d) {
      c_[i] += coeffs[i];
    } else {
      // t^e for e beyond the precomputed rows: reduce by repeated multiplication.
      FieldElem p = FieldElem::one(field_);
      const FieldElem t = generator(field_);
      for (int s = 0; s < e; ++s) p *= t;
      for (int j = 0; j < d; ++j) c_[static_cast<std::size_t>(j)] += coeffs[i] * p.c_[static_cast<std::size_t>(j)];
    }
  }
}

FieldElem::FieldElem(FieldPtr field, const Rational& q) : field_(std::move(field)) {
  c_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
  c_[0] = q;
}

FieldElem FieldElem::generator(const FieldPtr& field) {
  if (field->degree() == 1) return FieldElem(field, -field->modulus().coeff(0));
  std::vector<Rational> c(static_cast<std::size_t>(field->degree()));
  c[1] = Rational(1);
  return FieldElem(field, std::move(c));
}

bool FieldElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.is_zero(); });
}

bool FieldElem::is_one() const { return is_rational() && c_[0] == Rational(1); }

bool FieldElem::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q.is_zero(); });
}

const Rational& FieldElem::as_rational() const {
  if (!is_rational()) throw DomainError("element " + to_string() + " is not rational");
  return c_[0];
}

void FieldElem::check_same(const FieldElem& o) const {
  if (!field_ || !o.field_) throw DomainError("uninitialised field element");
  if (field_ != o.field_ && !field_->same_as(*o.field_)) throw FieldMismatch();
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same(o);
  const std::size_t d = c_.size();
  if (d == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (!o.c_[j].is_zero()) prod[i + j] += c_[i] * o.c_[j];
  }
  for (std::size_t i = 0; i < d; ++i) c_[i] = prod[i];
  for (std::size_t e = d; e < prod.size(); ++e) {
    if (prod[e].is_zero()) continue;
    const auto& row = field_->power_row(static_cast<int>(e));
    for (std::size_t i = 0; i < d; ++i) c_[i] += prod[e] * row[i];
  }
  return *this;
}

void FieldElem::multiply_add(FieldElem& acc, const FieldElem& a, const FieldElem& b) {
  if (a.c_.size() == 1 && b.c_.size() == 1 && acc.c_.size() == 1) {
    if (a.c_[0].is_zero() || b.c_[0].is_zero()) return;
    mpq_class t = a.c_[0].value() * b.c_[0].value();
    acc.c_[0] += Rational(std::move(t));
    return;
  }
  if (a.is_zero() || b.is_zero()) return;
  acc += a * b;
}

FieldElem FieldElem::inverse() const {
  if (!field_) throw DomainError("uninitialised field element");
  if (is_zero()) throw DivisionByZero();
  if (c_.size() == 1) return FieldElem(field_, c_[0].inverse());
  const RatPoly a(c_);
  const auto eg = extended_gcd(a, field_->modulus());
  if (eg.g.degree() > 0) throw ReducibleModulus(eg.g.to_string());
  return FieldElem(field_, eg.s.coeffs());
}

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem result = one(field_);
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

FieldElem FieldElem::coerce(const FieldPtr& target) const {
  if (field_ == target || field_->same_as(*target)) return FieldElem(target, c_);
  if (!is_rational())
    throw FieldMismatch();
  return FieldElem(target, c_[0]);
}

std::complex<long double> FieldElem::evaluate(std::complex<long double> t) const {
  std::complex<long double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->to_long_double();
  return acc;
}

std::string FieldElem::to_string() const {
  if (!field_) return "<unset>";
  if (c_.size() == 1) return c_[0].to_string();
  return RatPoly(c_).to_string("t");
}

std::vector<std::string> FieldElem::to_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& q : c_) out.push_back(q.to_string());
  return out;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (!a.field_ || !b.field_) return !a.field_ && !b.field_;
  if (a.field_ != b.field_ && !a.field_->same_as(*b.field_)) return false;
  return a.c_ == b.c_;
}

bool lex_less(const FieldElem& a, const FieldElem& b) {
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::vector<FieldElem> kth_roots(const FieldElem& a, int k) {
  if (k < 1) throw DomainError("root index must be positive");
  if (a.field()->degree() == 1) return rational_kth_roots(FieldElem(a.field(), a.coeffs()[0]), k);
  if (a.is_zero()) return {a};

  const FieldPtr& field = a.field();
  const auto& theta = field->complex_roots();
  const std::size_t d = theta.size();
  long double scale = 1;
  for (const auto& t : theta) scale = std::max(scale, std::abs(t));
  const long double real_tol = 1e-10L * scale;

  // Embedding classes: real roots, and one representative per conjugate pair.
  struct Slot {
    std::size_t index;
    long partner;  // -1 for real embeddings
    std::vector<cplx> choices;
  };
  std::vector<Slot> slots;
  std::vector<bool> used(d, false);
  for (std::size_t j = 0; j < d; ++j) {
    if (used[j]) continue;
    used[j] = true;
    const cplx alpha = a.evaluate(theta[j]);
    Slot s{j, -1, {}};
    if (std::abs(theta[j].imag()) < real_tol) {
      const long double v = alpha.real();
      const long double mag = std::pow(std::abs(v), 1.0L / k);
      if (v > 0) {
        s.choices.emplace_back(mag, 0);
        if (k % 2 == 0) s.choices.emplace_back(-mag, 0);
      } else if (k % 2 == 1) {
        s.choices.emplace_back(-mag, 0);
      }
    } else {
      long best = -1;
      for (std::size_t m = j + 1; m < d; ++m) {
        if (used[m]) continue;
        if (best < 0 || std::abs(theta[m] - std::conj(theta[j])) <
                            std::abs(theta[static_cast<std::size_t>(best)] - std::conj(theta[j])))
          best = static_cast<long>(m);
      }
      if (best < 0) throw InternalError("unpaired complex root of modulus");
      used[static_cast<std::size_t>(best)] = true;
      s.partner = best;
      const long double mag = std::pow(std::abs(alpha), 1.0L / k);
      const long double arg = std::arg(alpha);
      for (int m = 0; m < k; ++m)
        s.choices.push_back(std::polar(mag, (arg + 2 * std::numbers::pi_v<long double> * m) / k));
    }
    if (s.choices.empty()) return {};
    slots.push_back(std::move(s));
  }

  std::size_t combos = 1;
  for (const auto& s : slots) {
    combos *= s.choices.size();
    if (combos > (1u << 22)) throw DomainError("k-th root search space too large for this field");
  }

  std::vector<FieldElem> found;
  std::vector<std::size_t> pick(slots.size(), 0);
  std::vector<cplx> values(d);
  for (std::size_t c = 0; c < combos; ++c) {
    std::size_t rest = c;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      pick[s] = rest % slots[s].choices.size();
      rest /= slots[s].choices.size();
      const cplx v = slots[s].choices[pick[s]];
      values[slots[s].index] = v;
      if (slots[s].partner >= 0) values[static_cast<std::size_t>(slots[s].partner)] = std::conj(v);
    }
    const auto coords = solve_vandermonde(theta, values);
    std::vector<Rational> q(d);
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      const long double mag = std::max(1.0L, std::abs(coords[i]));
      if (std::abs(coords[i].imag()) > 1e-8L * mag) ok = false;
      else ok = reconstruct(coords[i].real(), 1e-9L * mag, 1000000, q[i]);
    }
    if (!ok) continue;
    FieldElem y(field, std::move(q));
    if (y.pow(k) == a &&
        std::none_of(found.begin(), found.end(), [&](const FieldElem& f) { return f == y; }))
      found.push_back(std::move(y));
  }
  std::sort(found.begin(), found.end(), lex_less);
  return found;
}

}  // namespace gfw
