#pragma once

#include <array>
#include <vector>

#include "gfw/curve.hpp"

namespace gfw {

/// Permutation of {0..n}; sigma[i] is the image of i.
using Permutation = std::vector<int>;
using LambdaTuple = std::vector<FieldElem>;

Permutation identity_permutation(int size);
Permutation transposition(int size, int a, int b);
Permutation inverse(const Permutation& sigma);
/// (sigma o tau)(i) = sigma(tau(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);
std::vector<Permutation> all_permutations(int size);

/// The Moebius renormalisation attached to sigma: T sends the markings
/// gamma_{sigma^-1(0)}, gamma_{sigma^-1(1)}, gamma_{sigma^-1(2)} to
/// infinity, 0, 1.
struct MoebiusChange {
  Permutation sigma;
  std::array<FieldElem, 4> matrix;  // row major [[a, b], [c, d]]
  LambdaTuple lambda;               // new parameters
  /// X'_m = kappa[m] * X_{sigma^-1(m)} up to one common factor, where
  /// X_i = x_i^k. kappa is normalised so that kappa[0] = 1.
  std::vector<FieldElem> kappa;
};

MoebiusChange moebius_change(const GFCurve& curve, const Permutation& sigma);

/// New parameter tuple for the relabelled markings.
LambdaTuple sym_action(const Permutation& sigma, const GFCurve& curve);
LambdaTuple sym_action(const Permutation& sigma, const LambdaTuple& lambda, int k = 2);

/// All images under S_{n+1}, deduplicated and sorted lexicographically.
std::vector<LambdaTuple> orbit(const LambdaTuple& lambda);
bool is_isomorphic(const LambdaTuple& a, const LambdaTuple& b);
/// Lexicographically least element of the orbit (an output convention).
LambdaTuple canonical_lambda(const LambdaTuple& lambda);

bool lambda_less(const LambdaTuple& a, const LambdaTuple& b);

}  // namespace gfw
