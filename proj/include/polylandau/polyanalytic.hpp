#pragma once

#include <vector>

#include "polylandau/analytic.hpp"

namespace polylandau {

/// Pair of Wirtinger derivatives (dF/dz, dF/dzbar).
struct WirtingerPair {
  Cplx dz;
  Cplx dzbar;
};

/// Directional-derivative extremes at a point: upper = |F_z| + |F_zbar|,
/// lower = ||F_z| - |F_zbar||.
struct DilatationBounds {
  double upper;
  double lower;
};

/// Poly-analytic function of order m: F(z) = sum_{k=0}^{m-1} conj(z)^k f_k(z)
/// with analytic components f_k.
///
/// At construction the normalization f_0'(0) = 1, f_k(0) = 0 is checked to
/// 1e-12 and recorded as a flag. Non-normalized functions remain fully
/// evaluable, but the verification checks refuse them; the flag records the
/// non-strict numerical check, which cannot distinguish < from <= bounds.
class PolyAnalyticFunction {
 public:
  explicit PolyAnalyticFunction(std::vector<AnalyticFunction> components);

  int order() const { return static_cast<int>(components_.size()); }
  const std::vector<AnalyticFunction>& components() const {
    return components_;
  }
  bool normalized() const { return normalized_; }

 private:
  std::vector<AnalyticFunction> components_;
  bool normalized_;
};

/// F(z) = sum_k conj(z)^k f_k(z) for |z| < 1.
Cplx eval_poly(const PolyAnalyticFunction& F, Cplx z);

/// Closed-form Wirtinger derivatives: F_z = sum_k conj(z)^k f_k'(z) and
/// F_zbar = sum_{k>=1} k conj(z)^{k-1} f_k(z). Never uses numerical
/// differentiation, so finite differences remain an independent check.
WirtingerPair wirtinger(const PolyAnalyticFunction& F, Cplx z);

DilatationBounds dilatation_bounds(const PolyAnalyticFunction& F, Cplx z);

/// Sharp extremal of the derivative-bounded class: component 0 is
/// LogDistortionExtremal(f0_deriv_bound), component k is -tail_deriv_bounds[k-1] * z.
/// Requires f0_deriv_bound > 1 and nonnegative tail bounds.
PolyAnalyticFunction make_extremal_F0(double f0_deriv_bound,
                                      const std::vector<double>& tail_deriv_bounds);

}  // namespace polylandau
