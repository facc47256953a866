#pragma once

#include <cstdint>
#include <vector>

#include "gfw/osc.hpp"

namespace gfw {

/// The double sum over the summands x_n^j Q(r-j) minus g(g+1)/2. Equals
/// w_hat(k, n).
std::int64_t w_hat_sum_check(int k, int n);

/// Total ramification b_0..b_{n-1} of the associated curves, all of it
/// supported on the fixed points.
std::vector<std::int64_t> b_totals(const GFCurve& curve);

struct PlueckerData {
  std::vector<std::int64_t> dees;        // d_0..d_n (d_{-1} = 0)
  std::vector<std::int64_t> bee_totals;  // b_0..b_{n-1}
};

/// d_{l+1} = 2 d_l - d_{l-1} + 2g - 2 - b_l from l = 0. Throws InternalError
/// unless d_n = 0.
PlueckerData pluecker_sequence(const GFCurve& curve);

struct JDiagnostic {
  int j = 0;
  std::vector<int> orders;  // of Q(r-j) at pi(p) on the quotient curve
  bool flagged = false;     // hyperosculating
  std::int64_t excess = 0;  // sum(o_i - i)
};

struct StrictnessReport {
  PointSpec point;
  std::int64_t w_hat = 0;
  std::int64_t w = 0;
  std::vector<JDiagnostic> per_j;
  bool predicted_equal = false;  // no j flagged
  bool consistent = false;       // (w == w_hat) == predicted_equal
  /// w - w_hat == k * sum_j excess_j: the canonical orders at p are
  /// j + k * (orders of Q(r-j) at pi(p)).
  bool identity_holds = false;
};

/// p must be a fixed point. It is first moved to axis n on an isomorphic
/// curve so that pi(p) is a branch value.
StrictnessReport strictness_diagnostic(const GFCurve& curve, const PointSpec& p,
                                       const ProfileOptions& options = {});

enum class Membership { Member, NotMember, Undetermined };

struct MhoResult {
  Membership status = Membership::Undetermined;
  std::int64_t points_checked = 0;
  /// Values x_i^k at branch values lacking a k-th root in the field.
  std::vector<FieldElem> missing_roots;
};

enum class MhoMode {
  /// One symbolic computation on the whole fibre of branch values; exact.
  Generic,
  /// Every branch value as an explicit point; undetermined when the field
  /// does not contain them all.
  Embedded,
};

MhoResult mho_probe(const GFCurve& curve, int j, MhoMode mode = MhoMode::Generic,
                    const ProfileOptions& options = {});

/// g^3 - g minus the given weights; InternalError if negative.
std::int64_t residual_weight(const GFCurve& curve, const std::vector<std::int64_t>& weights);

}  // namespace gfw
