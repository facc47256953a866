#include "gfw/moduli.hpp"

#include <algorithm>
#include <numeric>

#include "gfw/error.hpp"

namespace gfw {

namespace {

using Point1 = std::pair<FieldElem, FieldElem>;

FieldElem det(const Point1& x, const Point1& y) { return x.first * y.second - x.second * y.first; }

int eps(int i) { return i <= 1 ? 1 : -1; }

void check_permutation(const Permutation& sigma, int size) {
  if (static_cast<int>(sigma.size()) != size) throw DomainError("permutation has the wrong size");
  std::vector<bool> seen(sigma.size(), false);
  for (int v : sigma) {
    if (v < 0 || v >= size || seen[static_cast<std::size_t>(v)]) throw DomainError("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

Permutation identity_permutation(int size) {
  Permutation p(static_cast<std::size_t>(size));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation transposition(int size, int a, int b) {
  Permutation p = identity_permutation(size);
  std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
  return p;
}

Permutation inverse(const Permutation& sigma) {
  Permutation inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[static_cast<std::size_t>(sigma[i])] = static_cast<int>(i);
  return inv;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  Permutation out(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) out[i] = sigma[static_cast<std::size_t>(tau[i])];
  return out;
}

std::vector<Permutation> all_permutations(int size) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(size);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

MoebiusChange moebius_change(const GFCurve& curve, const Permutation& sigma) {
  const int size = curve.n() + 1;
  check_permutation(sigma, size);
  const Permutation inv = inverse(sigma);
  const Point1 a = curve.marking(inv[0]);
  const Point1 b = curve.marking(inv[1]);
  const Point1 c = curve.marking(inv[2]);
  const FieldElem dca = det(c, a);
  const FieldElem dcb = det(c, b);
  MoebiusChange out;
  out.sigma = sigma;
  out.matrix = {dca * b.second, -(dca * b.first), dcb * a.second, -(dcb * a.first)};
  auto apply = [&](const Point1& x) {
    return Point1{out.matrix[0] * x.first + out.matrix[1] * x.second,
                  out.matrix[2] * x.first + out.matrix[3] * x.second};
  };
  const FieldPtr& field = curve.field();
  std::vector<FieldElem> scale(static_cast<std::size_t>(size));
  for (int m = 0; m < size; ++m) {
    const Point1 img = apply(curve.marking(inv[static_cast<std::size_t>(m)]));
    FieldElem s;
    switch (m) {
      case 0:
        if (!img.second.is_zero()) throw InternalError("Moebius map does not send A to infinity");
        s = img.first;
        break;
      case 1:
        if (!img.first.is_zero()) throw InternalError("Moebius map does not send B to 0");
        s = img.second;
        break;
      case 2:
        if (img.first != img.second) throw InternalError("Moebius map does not send C to 1");
        s = img.second;
        break;
      default:
        s = img.second;
        out.lambda.push_back(img.first / img.second);
    }
    if (s.is_zero()) throw InternalError("degenerate Moebius image");
    scale[static_cast<std::size_t>(m)] = s;
  }
  out.kappa.resize(static_cast<std::size_t>(size));
  for (int m = 0; m < size; ++m) {
    const int sign = eps(m) * eps(inv[static_cast<std::size_t>(m)]);
    out.kappa[static_cast<std::size_t>(m)] = FieldElem(field, Rational(sign)) / scale[static_cast<std::size_t>(m)];
  }
  const FieldElem norm = out.kappa[0].inverse();
  for (auto& kv : out.kappa) kv *= norm;
  return out;
}

LambdaTuple sym_action(const Permutation& sigma, const GFCurve& curve) {
  return moebius_change(curve, sigma).lambda;
}

LambdaTuple sym_action(const Permutation& sigma, const LambdaTuple& lambda, int k) {
  const FieldPtr field = lambda.empty() ? NumberField::rationals() : lambda.front().field();
  const int n = static_cast<int>(lambda.size()) + 2;
  return sym_action(sigma, GFCurve::make_any_genus(k, n, lambda, field));
}

bool lambda_less(const LambdaTuple& a, const LambdaTuple& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
}

std::vector<LambdaTuple> orbit(const LambdaTuple& lambda) {
  const FieldPtr field = lambda.empty() ? NumberField::rationals() : lambda.front().field();
  const int n = static_cast<int>(lambda.size()) + 2;
  const GFCurve curve = GFCurve::make_any_genus(2, n, lambda, field);
  std::vector<LambdaTuple> out;
  for (const auto& sigma : all_permutations(n + 1)) out.push_back(sym_action(sigma, curve));
  std::sort(out.begin(), out.end(), lambda_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_isomorphic(const LambdaTuple& a, const LambdaTuple& b) {
  if (a.size() != b.size()) return false;
  const auto orb = orbit(a);
  return std::find(orb.begin(), orb.end(), b) != orb.end();
}

LambdaTuple canonical_lambda(const LambdaTuple& lambda) { return orbit(lambda).front(); }

}  // namespace gfw
