#include "gfw/theorems.hpp"

#include "gfw/error.hpp"

namespace gfw {

std::int64_t w_hat_sum_check(int k, int n) {
  const std::int64_t g = genus(k, n);
  std::int64_t total = 0;
  for (int j = 0; j < k; ++j) {
    const std::int64_t t = s_dim(k, n, j) - 1;
    for (std::int64_t i = 0; i <= t; ++i) total += k * i + j + 1;
  }
  return total - g * (g + 1) / 2;
}

std::vector<std::int64_t> b_totals(const GFCurve& curve) {
  const std::int64_t f = curve.fixed_point_count();
  std::vector<std::int64_t> b(static_cast<std::size_t>(curve.n()), f * (curve.k() - 1));
  b[0] = 0;
  if (curve.n() > 1) b[1] = f * (curve.k() - 2);
  return b;
}

PlueckerData pluecker_sequence(const GFCurve& curve) {
  PlueckerData out;
  out.bee_totals = b_totals(curve);
  const std::int64_t two_g_minus_2 = 2 * curve.genus() - 2;
  std::int64_t prev = 0;
  std::int64_t cur = curve.degree();
  out.dees.push_back(cur);
  for (int l = 0; l < curve.n(); ++l) {
    const std::int64_t next = 2 * cur - prev + two_g_minus_2 - out.bee_totals[static_cast<std::size_t>(l)];
    out.dees.push_back(next);
    prev = cur;
    cur = next;
  }
  if (out.dees.back() != 0)
    throw InternalError("Pluecker closure failed: d_n = " + std::to_string(out.dees.back()));
  return out;
}

StrictnessReport strictness_diagnostic(const GFCurve& curve, const PointSpec& p, const ProfileOptions& options) {
  if (curve.n() < 3) throw DomainError("strictness needs n >= 3");
  if (fixed_axis(p) < 0) throw DomainError("strictness needs a fixed point");
  StrictnessReport rep;
  rep.point = p;
  rep.w_hat = w_hat(curve.k(), curve.n());
  rep.w = gap_sequence(curve, p, options).weight;

  const auto [model, moved] = canonicalize_point(curve, p, curve.n());
  const GFCurve quotient = quotient_curve(model);
  const PointSpec image = project(model, moved);
  const int r = model.canonical_twist();
  std::int64_t total_excess = 0;
  for (int j = 0; j < curve.k(); ++j) {
    JDiagnostic d;
    d.j = j;
    const GradedBasis basis = sub_basis_Q(model, r, j);
    if (basis.size() > 0) {
      const OscProfile prof = profile(quotient, basis, image, options);
      d.orders = prof.orders;
      d.flagged = is_hyperosculating(prof);
      for (std::size_t i = 0; i < prof.orders.size(); ++i) d.excess += prof.orders[i] - static_cast<std::int64_t>(i);
    }
    total_excess += d.excess;
    rep.per_j.push_back(std::move(d));
  }
  rep.predicted_equal = true;
  for (const auto& d : rep.per_j) rep.predicted_equal = rep.predicted_equal && !d.flagged;
  rep.consistent = (rep.w == rep.w_hat) == rep.predicted_equal;
  rep.identity_holds = rep.w - rep.w_hat == curve.k() * total_excess;
  return rep;
}

MhoResult mho_probe(const GFCurve& curve, int j, MhoMode mode, const ProfileOptions& options) {
  if (curve.n() < 3) throw DomainError("mho probe needs n >= 3");
  if (j < 0 || j >= curve.k()) throw DomainError("j must lie in [0, k-1]");
  const GFCurve quotient = quotient_curve(curve);
  const GradedBasis basis = sub_basis_Q(curve, curve.canonical_twist(), j);
  MhoResult out;
  if (basis.size() == 0) {
    out.status = Membership::Member;
    return out;
  }
  if (mode == MhoMode::Generic) {
    out.points_checked = curve.degree();
    const GenericFiber fibre{curve.lambda().back()};
    out.status = is_hyperosculating(quotient, basis, fibre, options) ? Membership::NotMember
                                                                   : Membership::Member;
    return out;
  }
  const BranchValues bv = branch_values(curve);
  // One hyperosculating branch value settles non-membership even when the
  // field misses some of the others.
  for (const auto& e : bv.embedded) {
    ++out.points_checked;
    if (is_hyperosculating(quotient, basis, e, options)) {
      out.status = Membership::NotMember;
      return out;
    }
  }
  out.missing_roots = bv.missing_roots;
  out.status = out.missing_roots.empty() ? Membership::Member : Membership::Undetermined;
  return out;
}

std::int64_t residual_weight(const GFCurve& curve, const std::vector<std::int64_t>& weights) {
  const std::int64_t g = curve.genus();
  std::int64_t rest = g * g * g - g;
  for (auto w : weights) rest -= w;
  if (rest < 0) throw InternalError("weights exceed g^3 - g");
  return rest;
}

}  // namespace gfw
