#include "gfw/charts.hpp"

#include <sstream>

#include "gfw/error.hpp"
#include "gfw/moduli.hpp"

namespace gfw {

namespace {

int eps(int i) { return i <= 1 ? 1 : -1; }

int normalizer_for(int axis) { return axis == 0 ? 1 : 0; }

// X_i = A_i t0 + B_i t1 for some parameters (t0, t1); the chart fixes
// X_c = 1 and X_a = w. Returns alpha, beta with X_i = alpha_i + beta_i w.
struct Affine {
  std::vector<FieldElem> alpha, beta;
};

Affine solve_affine(const std::vector<FieldElem>& A, const std::vector<FieldElem>& B, int c, int a) {
  const FieldElem det = A[static_cast<std::size_t>(c)] * B[static_cast<std::size_t>(a)] -
                        B[static_cast<std::size_t>(c)] * A[static_cast<std::size_t>(a)];
  if (det.is_zero()) throw InternalError("singular chart system");
  const FieldElem inv = det.inverse();
  Affine out;
  for (std::size_t i = 0; i < A.size(); ++i) {
    out.alpha.push_back((A[i] * B[static_cast<std::size_t>(a)] - B[i] * A[static_cast<std::size_t>(a)]) * inv);
    out.beta.push_back((B[i] * A[static_cast<std::size_t>(c)] - A[i] * B[static_cast<std::size_t>(c)]) * inv);
  }
  return out;
}

// Rows through the P^1 parametrisation X_i = eps_i det(t, gamma_i).
Affine marking_affine(const GFCurve& curve, int c, int a) {
  std::vector<FieldElem> A, B;
  for (int i = 0; i <= curve.n(); ++i) {
    const auto [u, v] = curve.marking(i);
    const FieldElem e(curve.field(), Rational(eps(i)));
    A.push_back(e * v);
    B.push_back(-(e * u));
  }
  return solve_affine(A, B, c, a);
}

// Rows read off the defining equations, with (X_0, X_1) as parameters.
Affine equation_affine(const GFCurve& curve, int c, int a) {
  std::vector<FieldElem> A, B;
  const FieldPtr& f = curve.field();
  A.push_back(FieldElem::one(f));
  B.push_back(FieldElem::zero(f));
  A.push_back(FieldElem::zero(f));
  B.push_back(FieldElem::one(f));
  for (int i = 2; i <= curve.n(); ++i) {
    A.push_back(-curve.equation_coeff(i));
    B.push_back(FieldElem(f, Rational(-1)));
  }
  return solve_affine(A, B, c, a);
}

// (1 + (beta/alpha) w)^(1/k) to `t` terms.
TruncatedSeries root_body(const FieldElem& alpha, const FieldElem& beta, int k, int t) {
  const FieldPtr& f = alpha.field();
  if (beta.is_zero()) return TruncatedSeries::constant(FieldElem::one(f), t);
  return kth_root_one_plus(TruncatedSeries::monomial(beta / alpha, 1, t), k);
}

TruncatedSeries one_series(const FieldPtr& f, int t) { return TruncatedSeries::constant(FieldElem::one(f), t); }

LocalExpansion fixed_chart(const GFCurve& curve, int axis, const Affine& aff, const std::vector<FieldElem>* point,
                           int truncation, bool dense) {
  const int k = curve.k();
  LocalExpansion ex;
  ex.chart.kind = Chart::Kind::FixedAxis;
  ex.chart.axis = axis;
  ex.chart.normalizer = normalizer_for(axis);
  ex.generic = point == nullptr;
  ex.field = curve.field();
  ex.k = k;
  ex.stride = k;
  ex.truncation = truncation;
  const int tb = ex.body_truncation();
  for (int i = 0; i <= curve.n(); ++i) {
    CoordSeries cs;
    const auto ui = static_cast<std::size_t>(i);
    if (i == axis) {
      cs.offset = 1;
      cs.body = one_series(ex.field, tb);
    } else {
      cs.body = root_body(aff.alpha[ui], aff.beta[ui], k, tb);
      if (point) {
        if ((*point)[ui].pow(k) != aff.alpha[ui]) throw InternalError("point does not match its chart");
        cs.body = cs.body.scaled((*point)[ui]);
      } else if (!aff.alpha[ui].is_one()) {
        cs.has_root_symbol = true;
        cs.root_power = aff.alpha[ui];
      }
    }
    ex.coords.push_back(std::move(cs));
  }
  if (dense) {
    for (auto& cs : ex.coords) {
      cs.body = cs.body.spread(k, truncation);
      if (cs.offset == 1) {
        cs.body = cs.body.shifted(1);
        cs.offset = 0;
      }
    }
    ex.stride = 1;
  }
  return ex;
}

LocalExpansion fiber_chart(const GFCurve& curve, const FieldElem& c, int truncation) {
  const FieldPtr& f = curve.field();
  for (int i = 1; i <= curve.n(); ++i) {
    const auto [u, v] = curve.marking(i);
    if (u == c * v) throw DomainError("fibre value " + c.to_string() + " is a marking");
  }
  LocalExpansion ex;
  ex.chart.kind = Chart::Kind::Fiber;
  ex.chart.normalizer = 0;
  ex.chart.base = c;
  ex.generic = true;
  ex.field = f;
  ex.k = curve.k();
  ex.stride = 1;
  ex.truncation = truncation;
  for (int i = 0; i <= curve.n(); ++i) {
    const auto [u, v] = curve.marking(i);
    const FieldElem e(f, Rational(-eps(i)));
    const FieldElem alpha = e * (c * v - u);
    const FieldElem beta = e * v;
    CoordSeries cs;
    cs.body = root_body(alpha, beta, curve.k(), truncation);
    if (!alpha.is_one()) {
      cs.has_root_symbol = true;
      cs.root_power = alpha;
    }
    ex.coords.push_back(std::move(cs));
  }
  return ex;
}

LocalExpansion affine_chart(const GFCurve& curve, const Embedded& p, int truncation) {
  const FieldPtr& f = p.field;
  const int k = curve.k();
  const FieldElem& c1 = p.coords[1];
  LocalExpansion ex;
  ex.chart.kind = Chart::Kind::Affine;
  ex.chart.normalizer = 0;
  ex.chart.base = c1;
  ex.generic = false;
  ex.field = f;
  ex.k = k;
  ex.stride = 1;
  ex.truncation = truncation;
  TruncatedSeries x1 = TruncatedSeries::constant(c1, truncation);
  if (truncation > 1) x1[1] = FieldElem::one(f);
  const TruncatedSeries x1k = int_pow(x1, k);
  ex.coords.push_back(CoordSeries{0, one_series(f, truncation), false, {}});
  ex.coords.push_back(CoordSeries{0, x1, false, {}});
  for (int i = 2; i <= curve.n(); ++i) {
    const FieldElem& xi = p.coords[static_cast<std::size_t>(i)];
    const FieldElem xik = xi.pow(k);
    TruncatedSeries X = TruncatedSeries::constant(-curve.equation_coeff(i), truncation) - x1k;
    if (X[0] != xik) throw InternalError("point does not match its chart");
    X[0] = FieldElem::zero(f);
    CoordSeries cs;
    cs.body = kth_root_one_plus(X.scaled(xik.inverse()), k).scaled(xi);
    ex.coords.push_back(std::move(cs));
  }
  return ex;
}

}  // namespace

Embedded make_embedded(const GFCurve& curve, std::vector<FieldElem> coords) {
  if (static_cast<int>(coords.size()) != curve.n() + 1)
    throw DomainError("point needs " + std::to_string(curve.n() + 1) + " coordinates");
  FieldPtr field = curve.field();
  for (const auto& x : coords)
    if (x.field()->degree() > field->degree()) field = x.field();
  for (auto& x : coords) x = x.coerce(field);
  const GFCurve c = curve.over(field);
  std::size_t first = 0;
  while (first < coords.size() && coords[first].is_zero()) ++first;
  if (first == coords.size()) throw DomainError("all coordinates vanish");
  const FieldElem inv = coords[first].inverse();
  int zeros = 0;
  for (auto& x : coords) {
    x *= inv;
    if (x.is_zero()) ++zeros;
  }
  if (zeros > 1) throw DomainError("point has two vanishing coordinates; not on the curve");
  const int k = curve.k();
  const FieldElem X0 = coords[0].pow(k);
  const FieldElem X1 = coords[1].pow(k);
  for (int i = 2; i <= curve.n(); ++i) {
    const FieldElem lhs = c.equation_coeff(i) * X0 + X1 + coords[static_cast<std::size_t>(i)].pow(k);
    if (!lhs.is_zero())
      throw DomainError("point is not on the curve (equation " + std::to_string(i - 1) + " gives " +
                        lhs.to_string() + ")");
  }
  return Embedded{field, std::move(coords)};
}

int fixed_axis(const PointSpec& p) {
  if (const auto* g = std::get_if<GenericFixed>(&p)) return g->axis;
  if (const auto* e = std::get_if<Embedded>(&p)) {
    for (std::size_t i = 0; i < e->coords.size(); ++i)
      if (e->coords[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

bool is_generic(const PointSpec& p) { return !std::holds_alternative<Embedded>(p); }

std::string describe(const PointSpec& p) {
  std::ostringstream os;
  if (const auto* g = std::get_if<GenericFixed>(&p)) {
    os << "fixed(axis=" << g->axis << ")";
  } else if (const auto* f = std::get_if<GenericFiber>(&p)) {
    os << "fibre(" << f->c.to_string() << ")";
  } else {
    const auto& e = std::get<Embedded>(p);
    os << "[";
    for (std::size_t i = 0; i < e.coords.size(); ++i) os << (i ? ":" : "") << e.coords[i].to_string();
    os << "]";
  }
  return os.str();
}

std::string Chart::describe() const {
  switch (kind) {
    case Kind::FixedAxis:
      return "z = x" + std::to_string(axis) + "/x" + std::to_string(normalizer);
    case Kind::Fiber:
      return "z = -(x1/x0)^k - (" + base.to_string() + ")";
    case Kind::Affine:
      return "z = x1/x0 - (" + base.to_string() + ")";
  }
  return "";
}

TruncatedSeries LocalExpansion::kth_power(int i) const {
  const CoordSeries& cs = coords[static_cast<std::size_t>(i)];
  TruncatedSeries b = int_pow(cs.body, k).spread(stride, truncation).shifted(cs.offset * k);
  if (cs.has_root_symbol) b = b.scaled(cs.root_power);
  return b;
}

std::vector<TruncatedSeries> LocalExpansion::equation_residuals(const GFCurve& curve) const {
  const GFCurve c = curve.over(field);
  const TruncatedSeries X0 = kth_power(0);
  const TruncatedSeries X1 = kth_power(1);
  std::vector<TruncatedSeries> out;
  for (int i = 2; i <= c.n(); ++i) out.push_back(X0.scaled(c.equation_coeff(i)) + X1 + kth_power(i));
  return out;
}

LocalExpansion local_expansion(const GFCurve& curve, const PointSpec& p, int truncation,
                               ExpansionOptions options) {
  if (truncation < 1) throw DomainError("truncation must be positive");
  if (const auto* g = std::get_if<GenericFixed>(&p)) {
    if (g->axis < 0 || g->axis > curve.n()) throw DomainError("axis out of range");
    return fixed_chart(curve, g->axis, marking_affine(curve, normalizer_for(g->axis), g->axis), nullptr,
                       truncation, options.dense);
  }
  if (const auto* f = std::get_if<GenericFiber>(&p)) {
    return fiber_chart(curve, f->c.coerce(curve.field()), truncation);
  }
  const Embedded e = make_embedded(curve, std::get<Embedded>(p).coords);
  const GFCurve c = curve.over(e.field);
  const int axis = fixed_axis(e);
  if (axis >= 0)
    return fixed_chart(c, axis, equation_affine(c, normalizer_for(axis), axis), &e.coords, truncation,
                       options.dense);
  return affine_chart(c, e, truncation);
}

namespace {

// Cartesian product of root choices; slots with a single fixed value hold it.
std::vector<std::vector<FieldElem>> product(const std::vector<std::vector<FieldElem>>& choices) {
  std::vector<std::vector<FieldElem>> out{{}};
  for (const auto& slot : choices) {
    std::vector<std::vector<FieldElem>> next;
    for (const auto& prefix : out)
      for (const auto& v : slot) {
        next.push_back(prefix);
        next.back().push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

FixedPointSet fixed_points(const GFCurve& curve, int axis) {
  if (axis < 0 || axis > curve.n()) throw DomainError("axis out of range");
  FixedPointSet out;
  out.count = curve.fixed_points_per_axis();
  out.generic = GenericFixed{axis};
  const int c = normalizer_for(axis);
  const Affine aff = equation_affine(curve, c, axis);
  std::vector<std::vector<FieldElem>> choices;
  for (int i = 0; i <= curve.n(); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (i == axis) {
      choices.push_back({FieldElem::zero(curve.field())});
    } else if (i == c) {
      choices.push_back({FieldElem::one(curve.field())});
    } else {
      auto roots = kth_roots(aff.alpha[ui], curve.k());
      if (roots.empty()) return out;
      choices.push_back(std::move(roots));
    }
  }
  for (auto& coords : product(choices)) out.embedded.push_back(make_embedded(curve, std::move(coords)));
  return out;
}

BranchValues branch_values(const GFCurve& curve) {
  const GFCurve q = quotient_curve(curve);
  const FieldElem& c = curve.lambda().back();
  BranchValues out;
  out.count = curve.degree();
  out.generic = GenericFiber{c};
  const FieldPtr& f = curve.field();
  std::vector<std::vector<FieldElem>> choices{{FieldElem::one(f)}};
  for (int i = 1; i <= q.n(); ++i) {
    const auto [u, v] = q.marking(i);
    const FieldElem alpha = FieldElem(f, Rational(-eps(i))) * (c * v - u);
    auto roots = kth_roots(alpha, curve.k());
    if (static_cast<int>(roots.size()) < curve.k()) out.missing_roots.push_back(alpha);
    choices.push_back(std::move(roots));
  }
  for (auto& coords : product(choices)) out.embedded.push_back(make_embedded(q, std::move(coords)));
  return out;
}

PointSpec project(const GFCurve& curve, const PointSpec& p) {
  const GFCurve q = quotient_curve(curve);
  if (const auto* g = std::get_if<GenericFixed>(&p)) {
    if (g->axis == curve.n()) return GenericFiber{curve.lambda().back()};
    return GenericFixed{g->axis};
  }
  if (const auto* f = std::get_if<GenericFiber>(&p)) return *f;
  const auto& e = std::get<Embedded>(p);
  std::vector<FieldElem> coords(e.coords.begin(), e.coords.end() - 1);
  return make_embedded(q, std::move(coords));
}

std::pair<GFCurve, PointSpec> canonicalize_point(const GFCurve& curve, const PointSpec& p, int target_axis) {
  const int axis = fixed_axis(p);
  if (axis < 0) throw DomainError("canonicalize_point needs a fixed point");
  if (axis == target_axis) return {curve, p};
  const Permutation sigma = transposition(curve.n() + 1, axis, target_axis);
  if (std::holds_alternative<GenericFixed>(p)) {
    const MoebiusChange mc = moebius_change(curve, sigma);
    return {GFCurve::make_any_genus(curve.k(), curve.n(), mc.lambda, curve.field()), GenericFixed{target_axis}};
  }
  const auto& e = std::get<Embedded>(p);
  const GFCurve c = curve.over(e.field);
  const MoebiusChange mc = moebius_change(c, sigma);
  const GFCurve image = GFCurve::make_any_genus(c.k(), c.n(), mc.lambda, e.field);
  const Permutation inv = inverse(sigma);
  std::vector<FieldElem> coords;
  for (int m = 0; m <= c.n(); ++m) {
    const auto& kappa = mc.kappa[static_cast<std::size_t>(m)];
    const auto roots = kth_roots(kappa, c.k());
    if (roots.empty()) throw FieldTooSmall("no " + std::to_string(c.k()) + "-th root of " + kappa.to_string());
    coords.push_back(roots.front() * e.coords[static_cast<std::size_t>(inv[static_cast<std::size_t>(m)])]);
  }
  return {image, make_embedded(image, std::move(coords))};
}

}  // namespace gfw
