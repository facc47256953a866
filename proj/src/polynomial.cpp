#include "gfw/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gfw/error.hpp"

namespace gfw {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = leading().inverse();
  std::vector<Rational> out = c_;
  for (auto& x : out) x *= inv;
  return RatPoly(std::move(out));
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return RatPoly(std::move(out));
}

Rational RatPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(out));
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational a = c.sign() < 0 ? -c : c;
    if (i == 0 || a != Rational(1)) os << a;
    if (i > 0) os << var << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return os.str();
}

PolyDivision divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] * inv;
    if (f.is_zero()) continue;
    quo[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0(std::vector<Rational>{Rational(1)}), s1;
  RatPoly t0, t1(std::vector<Rational>{Rational(1)});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const RatPoly scale(std::vector<Rational>{r0.leading().inverse()});
  return {r0 * scale, s0 * scale, t0 * scale};
}

namespace {

// Positive divisors of |v| by trial division; moduli here are small.
std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const RatPoly& p) {
  if (p.degree() < 1) return {};
  std::set<Rational> roots;
  // Strip the factor t^j (root 0).
  std::size_t low = 0;
  while (p.coeffs()[low].is_zero()) ++low;
  if (low > 0) roots.insert(Rational(0));
  std::vector<Rational> rest(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end());
  if (rest.size() > 1) {
    mpz_class lcm_den = 1;
    for (const auto& c : rest) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : rest) ints.push_back(c.num() * (lcm_den / c.den()));
    const RatPoly reduced(std::move(rest));
    for (const auto& num : divisors(ints.front())) {
      for (const auto& den : divisors(ints.back())) {
        for (int s : {1, -1}) {
          const Rational cand(mpq_class(s * num, den));
          if (reduced.evaluate(cand).is_zero()) roots.insert(cand);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace gfw
