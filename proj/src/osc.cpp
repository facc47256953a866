#include "gfw/osc.hpp"

#include <algorithm>
#include <map>

#include "gfw/error.hpp"

namespace gfw {

FormMatrix evaluate_forms(const GradedBasis& basis, const LocalExpansion& ex, const ExecPolicy& policy) {
  const std::size_t ncoords = ex.coords.size();
  const int tb = ex.body_truncation();
  std::vector<int> max_exp(ncoords, 0);
  for (const auto& mono : basis.monomials) {
    if (mono.e.size() != ncoords) throw DomainError("monomial arity does not match the curve");
    for (std::size_t i = 0; i < ncoords; ++i) max_exp[i] = std::max(max_exp[i], mono.e[i]);
  }
  // powers[i][e] = body_i^e
  std::vector<std::vector<TruncatedSeries>> powers(ncoords);
  for_each_index(ncoords, policy, [&](std::size_t i) {
    auto& p = powers[i];
    p.push_back(TruncatedSeries::constant(FieldElem::one(ex.field), tb));
    for (int e = 1; e <= max_exp[i]; ++e) p.push_back(p.back() * ex.coords[i].body);
  });

  FormMatrix out;
  out.stride = ex.stride;
  out.truncation = ex.truncation;
  out.rows.resize(basis.size());
  for_each_index(basis.size(), policy, [&](std::size_t r) {
    const Monomial& mono = basis.monomials[r];
    int offset = 0;
    TruncatedSeries s = TruncatedSeries::constant(FieldElem::one(ex.field), tb);
    FieldElem scale = FieldElem::one(ex.field);
    FormRow row;
    row.key.residues.assign(ncoords, 0);
    for (std::size_t i = 0; i < ncoords; ++i) {
      const int e = mono.e[i];
      if (e == 0) continue;
      const CoordSeries& cs = ex.coords[i];
      offset += e * cs.offset;
      s = s * powers[i][static_cast<std::size_t>(e)];
      if (cs.has_root_symbol) {
        // rho^e = (rho^k)^(e div k) * rho^(e mod k); the last factor is the class.
        row.key.residues[i] = e % ex.k;
        if (e >= ex.k) scale *= cs.root_power.pow(e / ex.k);
      }
    }
    if (!scale.is_one()) s = s.scaled(scale);
    row.residue = offset % ex.stride;
    row.series = s.shifted(offset / ex.stride);
    out.rows[r] = std::move(row);
  });
  return out;
}

namespace {

struct WorkRow {
  std::size_t index;
  std::vector<FieldElem> c;
  int order;
};

int first_nonzero(const std::vector<FieldElem>& c, int from) {
  for (int i = from; i < static_cast<int>(c.size()); ++i)
    if (!c[static_cast<std::size_t>(i)].is_zero()) return i;
  return -1;
}

std::vector<int> eliminate_class(std::vector<WorkRow> rows, const ExecPolicy& policy) {
  std::vector<int> orders;
  for (auto& r : rows) {
    r.order = first_nonzero(r.c, 0);
    if (r.order < 0) throw TruncationExhausted();
  }
  while (!rows.empty()) {
    std::size_t piv = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i].order < rows[piv].order ||
          (rows[i].order == rows[piv].order && rows[i].index < rows[piv].index))
        piv = i;
    const WorkRow pivot = std::move(rows[piv]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(piv));
    const int o = pivot.order;
    orders.push_back(o);
    const FieldElem inv = pivot.c[static_cast<std::size_t>(o)].inverse();
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].order == o) hits.push_back(i);
    for_each_index(hits.size(), policy, [&](std::size_t h) {
      WorkRow& r = rows[hits[h]];
      const FieldElem f = r.c[static_cast<std::size_t>(o)] * inv;
      for (std::size_t j = static_cast<std::size_t>(o); j < r.c.size(); ++j)
        if (!pivot.c[j].is_zero()) r.c[j] -= f * pivot.c[j];
      r.order = first_nonzero(r.c, o + 1);
    });
    for (std::size_t h : hits)
      if (rows[h].order < 0) throw TruncationExhausted();
  }
  return orders;
}

}  // namespace

std::vector<int> pivot_orders(const FormMatrix& m, const ExecPolicy& policy) {
  std::map<int, std::vector<WorkRow>> classes;
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    classes[m.rows[i].residue].push_back(WorkRow{i, m.rows[i].series.coeffs(), -1});
  std::vector<std::pair<int, std::vector<WorkRow>>> work(classes.begin(), classes.end());
  std::vector<std::vector<int>> results(work.size());
  const bool across = work.size() > 1;
  for_each_index(work.size(), across ? policy : ExecPolicy::serial(), [&](std::size_t c) {
    results[c] = eliminate_class(std::move(work[c].second), across ? ExecPolicy::serial() : policy);
  });
  std::vector<int> out;
  for (std::size_t c = 0; c < work.size(); ++c)
    for (int o : results[c]) out.push_back(work[c].first + m.stride * o);
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw InternalError("duplicate orders across residue classes");
  return out;
}

int default_truncation(const GFCurve& curve, std::size_t family_size) {
  const std::int64_t t = std::max<std::int64_t>(2 * curve.genus() + 2 * curve.k(),
                                                static_cast<std::int64_t>(family_size) + curve.k());
  return static_cast<int>(t);
}

OscProfile profile_from_orders(std::vector<int> orders) {
  OscProfile p;
  p.orders = std::move(orders);
  if (p.orders.empty()) return p;
  p.base_order = p.orders.front();
  for (std::size_t i = 1; i < p.orders.size(); ++i) p.alphas.push_back(p.orders[i] - p.orders[i - 1] - 1);
  p.bees = p.alphas;
  return p;
}

OscProfile profile(const GFCurve& curve, const GradedBasis& basis, const PointSpec& p,
                   const ProfileOptions& options) {
  if (basis.size() == 0) throw DomainError("empty form family");
  const bool automatic = options.truncation <= 0;
  // No nonzero form of degree m vanishes beyond order m * deg.
  const std::int64_t cap = static_cast<std::int64_t>(std::max(basis.m, 0)) * curve.degree() + 1;
  int t = automatic ? default_truncation(curve, basis.size()) : options.truncation;
  for (;;) {
    try {
      const LocalExpansion ex = local_expansion(curve, p, t, options.expansion);
      auto orders = pivot_orders(evaluate_forms(basis, ex, options.policy), options.policy);
      OscProfile prof = profile_from_orders(std::move(orders));
      prof.truncation = t;
      return prof;
    } catch (const TruncationExhausted&) {
      if (!automatic) throw;
      if (t >= cap) throw InternalError("forms are linearly dependent on the curve");
      t = static_cast<int>(std::min<std::int64_t>(2 * static_cast<std::int64_t>(t), cap));
    }
  }
}

bool is_hyperosculating(const OscProfile& prof) {
  for (std::size_t i = 0; i < prof.orders.size(); ++i)
    if (prof.orders[i] != static_cast<int>(i)) return true;
  return false;
}

bool is_hyperosculating(const GFCurve& curve, const GradedBasis& basis, const PointSpec& p,
                        const ProfileOptions& options) {
  return is_hyperosculating(profile(curve, basis, p, options));
}

GapData gaps_from_profile(const OscProfile& prof) {
  GapData g;
  for (std::size_t i = 0; i < prof.orders.size(); ++i) {
    g.gaps.push_back(prof.orders[i] + 1);
    g.weight += prof.orders[i] - static_cast<std::int64_t>(i);
  }
  return g;
}

GapData gap_sequence(const GFCurve& curve, const PointSpec& p, const ProfileOptions& options) {
  if (!curve.hyperbolic()) throw DomainError("genus <= 1 unsupported");
  const OscProfile prof = profile(curve, monomial_basis(curve, curve.canonical_twist()), p, options);
  GapData g = gaps_from_profile(prof);
  if (static_cast<std::int64_t>(g.gaps.size()) != curve.genus())
    throw InternalError("canonical family does not have dimension g");
  if (g.gaps.front() != 1 || g.gaps.back() > 2 * curve.genus() - 1)
    throw InternalError("gap sequence out of range");
  return g;
}

OscProfile embedding_profile(const GFCurve& curve, const PointSpec& p, const ProfileOptions& options) {
  return profile(curve, monomial_basis(curve, 1), p, options);
}

}  // namespace gfw
