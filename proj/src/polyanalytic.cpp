#include "polylandau/polyanalytic.hpp"

#include <cmath>
#include <stdexcept>

namespace polylandau {

PolyAnalyticFunction::PolyAnalyticFunction(
    std::vector<AnalyticFunction> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw std::invalid_argument("poly-analytic function needs at least one component");
  bool ok = std::abs(deriv(components_[0], 0.0) - 1.0) <= 1e-12;
  for (const AnalyticFunction& f : components_)
    ok = ok && std::abs(eval(f, 0.0)) <= 1e-12;
  normalized_ = ok;
}

Cplx eval_poly(const PolyAnalyticFunction& F, Cplx z) {
  const Cplx zb = std::conj(z);
  Cplx zb_pow = 1.0;
  Cplx acc = 0.0;
  for (const AnalyticFunction& f : F.components()) {
    acc += zb_pow * eval(f, z);
    zb_pow *= zb;
  }
  return acc;
}

WirtingerPair wirtinger(const PolyAnalyticFunction& F, Cplx z) {
  const Cplx zb = std::conj(z);
  Cplx zb_pow = 1.0;   // conj(z)^k
  Cplx zb_prev = 0.0;  // conj(z)^{k-1}
  WirtingerPair out{0.0, 0.0};
  int k = 0;
  for (const AnalyticFunction& f : F.components()) {
    out.dz += zb_pow * deriv(f, z);
    if (k >= 1) out.dzbar += static_cast<double>(k) * zb_prev * eval(f, z);
    zb_prev = zb_pow;
    zb_pow *= zb;
    ++k;
  }
  return out;
}

DilatationBounds dilatation_bounds(const PolyAnalyticFunction& F, Cplx z) {
  const WirtingerPair w = wirtinger(F, z);
  const double a = std::abs(w.dz), b = std::abs(w.dzbar);
  return {a + b, std::fabs(a - b)};
}

PolyAnalyticFunction make_extremal_F0(
    double f0_deriv_bound, const std::vector<double>& tail_deriv_bounds) {
  for (double b : tail_deriv_bounds)
    if (!(b >= 0.0))
      throw std::invalid_argument("tail derivative bounds must be nonnegative");
  std::vector<AnalyticFunction> comps;
  comps.reserve(1 + tail_deriv_bounds.size());
  comps.emplace_back(LogDistortionExtremal(f0_deriv_bound));
  for (double b : tail_deriv_bounds)
    comps.emplace_back(ScaledIdentity(Cplx(-b, 0.0)));
  return PolyAnalyticFunction(std::move(comps));
}

}  // namespace polylandau
