#pragma once

#include <cstdint>
#include <vector>

#include "gfw/charts.hpp"
#include "gfw/curve.hpp"
#include "gfw/parallel.hpp"

namespace gfw {

/// One evaluated form: z^residue * w^shift-adjusted series in w = z^stride,
/// scaled so that root symbols drop out. Rows with different residues mod the
/// stride never combine, so each residue class is eliminated separately.
struct FormRow {
  int residue = 0;
  TruncatedSeries series;  // in w, already shifted
  ClassKey key;            // generic mode only
};

struct FormMatrix {
  int stride = 1;
  int truncation = 0;  // in z
  std::vector<FormRow> rows;
};

FormMatrix evaluate_forms(const GradedBasis& basis, const LocalExpansion& ex,
                          const ExecPolicy& policy = ExecPolicy::serial());

/// Orders of vanishing (in z) attained by nonzero combinations of the rows,
/// ascending. Order-pivoted Gaussian elimination per residue class; the
/// lowest row index wins ties. Throws TruncationExhausted when a row
/// vanishes inside the stored window.
std::vector<int> pivot_orders(const FormMatrix& m, const ExecPolicy& policy = ExecPolicy::serial());

struct OscProfile {
  std::vector<int> orders;
  int base_order = 0;       // o_0
  std::vector<int> alphas;  // alpha_1..alpha_{N-1}: o_i = o_0 + i + alpha_1 + ... + alpha_i
  std::vector<int> bees;    // b_l = alpha_{l+1}, l = 0..N-2
  int truncation = 0;       // truncation that succeeded
};

struct ProfileOptions {
  int truncation = 0;  // 0: default, with doubling on exhaustion
  ExpansionOptions expansion;
  ExecPolicy policy;
};

int default_truncation(const GFCurve& curve, std::size_t family_size);

OscProfile profile_from_orders(std::vector<int> orders);
OscProfile profile(const GFCurve& curve, const GradedBasis& basis, const PointSpec& p,
                   const ProfileOptions& options = {});
bool is_hyperosculating(const OscProfile& prof);
bool is_hyperosculating(const GFCurve& curve, const GradedBasis& basis, const PointSpec& p,
                        const ProfileOptions& options = {});

struct GapData {
  std::vector<int> gaps;
  std::int64_t weight = 0;
};

GapData gaps_from_profile(const OscProfile& prof);
GapData gap_sequence(const GFCurve& curve, const PointSpec& p, const ProfileOptions& options = {});
OscProfile embedding_profile(const GFCurve& curve, const PointSpec& p, const ProfileOptions& options = {});

}  // namespace gfw
