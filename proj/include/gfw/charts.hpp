#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gfw/curve.hpp"
#include "gfw/series.hpp"

namespace gfw {

/// All k^(n-1) points with x_axis = 0, handled symbolically. Every such point
/// has the same local data up to the group action, so one expansion serves
/// them all.
struct GenericFixed {
  int axis = 0;
};

/// All points of the fibre of the quotient map -x_1^k/x_0^k over a value c
/// that is not a marking. Used for branch values on the quotient curve.
struct GenericFiber {
  FieldElem c;
};

/// A concrete point with coordinates in `field`. The first nonzero
/// coordinate is 1.
struct Embedded {
  FieldPtr field;
  std::vector<FieldElem> coords;
};

using PointSpec = std::variant<GenericFixed, GenericFiber, Embedded>;

/// Normalises, checks every defining equation exactly and that at most one
/// coordinate vanishes.
Embedded make_embedded(const GFCurve& curve, std::vector<FieldElem> coords);

/// Index of the vanishing coordinate of a fixed point, or -1.
int fixed_axis(const PointSpec& p);
bool is_generic(const PointSpec& p);
std::string describe(const PointSpec& p);

/// Residues mod k of the root-symbol exponents of a generic-mode monomial;
/// one entry per coordinate, zero where the coordinate carries no symbol.
struct ClassKey {
  std::vector<int> residues;
  friend bool operator==(const ClassKey&, const ClassKey&) = default;
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

struct Chart {
  enum class Kind { FixedAxis, Fiber, Affine };
  Kind kind = Kind::FixedAxis;
  int axis = -1;        // vanishing coordinate (FixedAxis)
  int normalizer = 0;   // coordinate fixed to 1
  FieldElem base;       // fibre value (Fiber) or x_1/x_0 at the point (Affine)
  std::string describe() const;
};

/// x_i = scale_i * z^offset * body(z^stride). In generic mode scale_i is the
/// root symbol rho_i with rho_i^k = root_power; in embedded mode the scale is
/// already multiplied into the body and root_power is unused.
struct CoordSeries {
  int offset = 0;
  TruncatedSeries body;
  bool has_root_symbol = false;
  FieldElem root_power;
};

struct LocalExpansion {
  Chart chart;
  bool generic = false;
  FieldPtr field;
  int k = 0;
  int stride = 1;
  int truncation = 0;  // in powers of z
  std::vector<CoordSeries> coords;

  int body_truncation() const { return (truncation + stride - 1) / stride; }
  /// x_i^k as a dense series in z (root symbols resolved through rho^k).
  TruncatedSeries kth_power(int i) const;
  /// Left-hand sides of the defining equations along the expansion, as dense
  /// series in z. All of them vanish to the stored truncation.
  std::vector<TruncatedSeries> equation_residuals(const GFCurve& curve) const;
};

struct ExpansionOptions {
  /// Materialise fixed-point charts with stride 1 instead of k.
  bool dense = false;
};

LocalExpansion local_expansion(const GFCurve& curve, const PointSpec& p, int truncation,
                               ExpansionOptions options = {});

struct FixedPointSet {
  std::int64_t count = 0;
  GenericFixed generic;
  std::vector<Embedded> embedded;
};

/// Fixed points on one axis; the embedded list holds those whose coordinates
/// lie in the curve's field.
FixedPointSet fixed_points(const GFCurve& curve, int axis);

struct BranchValues {
  std::int64_t count = 0;
  GenericFiber generic;       // on the quotient curve
  std::vector<Embedded> embedded;
  /// Values x_i^k (i = 1..n-1) whose k roots are not all in the field; empty
  /// exactly when the embedded list is complete.
  std::vector<FieldElem> missing_roots;
};

BranchValues branch_values(const GFCurve& curve);

/// Image under the covering map that drops the last coordinate.
PointSpec project(const GFCurve& curve, const PointSpec& p);

/// Moves a fixed point to the given axis on an isomorphic curve, using the
/// transposition of the two markings. Gap data is unchanged.
std::pair<GFCurve, PointSpec> canonicalize_point(const GFCurve& curve, const PointSpec& p,
                                                 int target_axis = 1);

}  // namespace gfw
