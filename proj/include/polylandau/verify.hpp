#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "polylandau/polyanalytic.hpp"
#include "polylandau/radii.hpp"

namespace polylandau {

/// Deterministic sampler of point pairs, area-uniform in the disc of the given
/// radius: each coordinate draws radius rho*sqrt(u) and a uniform angle, so the
/// worst-margin search is not biased toward the center. Identical
/// seed/count/radius reproduce the identical sequence bit for bit.
struct PairSampler {
  std::uint64_t seed;
  int count;
  double disc_radius;

  PairSampler(std::uint64_t seed_, int count_, double disc_radius_);

  template <typename Fn>
  void for_each_pair(Fn&& fn) const {
    std::mt19937_64 rng(seed);
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const double two_pi = 2.0 * std::numbers::pi;
    for (int i = 0; i < count; ++i) {
      const double r1 = disc_radius * std::sqrt(unit());
      const double t1 = two_pi * unit();
      const double r2 = disc_radius * std::sqrt(unit());
      const double t2 = two_pi * unit();
      fn(std::polar(r1, t1), std::polar(r2, t2));
    }
  }
};

/// n_points equally spaced points r e^{2 pi i j / n} on the circle |z| = r.
struct BoundarySampler {
  double radius;
  int point_count;

  BoundarySampler(double radius_, int point_count_);
  Cplx point(int j) const {
    return std::polar(radius, 2.0 * std::numbers::pi * j / point_count);
  }
};

/// Sample pair (or point) at which a check attained its worst margin. For
/// single-point checks z2/value2 carry auxiliary data as documented per check.
struct Witness {
  Cplx z1{};
  Cplx z2{};
  Cplx value1{};
  Cplx value2{};
};

/// Outcome of one sampled certification run. passed <=> worst_margin >= -slack;
/// the slack only absorbs floating-point noise, since the certified
/// inequalities hold with positive analytic margin at sample points.
struct VerificationReport {
  std::string check_name;
  bool passed = false;
  double worst_margin = 0.0;
  std::optional<Witness> witness;
  long samples_used = 0;
  double slack = 0.0;
};

/// Lower Lipschitz sandwich at sample scale: requires
/// |F(z1)-F(z2)| >= co_lipschitz |z1-z2| - slack on every sampled pair.
/// worst_margin is the smallest |dF| - l |dz|. F must be normalized.
VerificationReport check_colipschitz(const PolyAnalyticFunction& F,
                                     const PairSampler& sampler,
                                     double co_lipschitz, double slack = 1e-9);

/// Upper sandwich: |F(z1)-F(z2)| <= lipschitz |z1-z2| + slack;
/// worst_margin is the smallest L |dz| - |dF|.
VerificationReport check_lipschitz(const PolyAnalyticFunction& F,
                                   const PairSampler& sampler, double lipschitz,
                                   double slack = 1e-9);

/// Coverage: min over boundary samples of |F(z)| >= schlicht_radius - slack.
/// worst_margin = min|F| - R; the witness records the argmin point (z1, value1)
/// and the achieved minimum in value2.
VerificationReport check_schlicht(const PolyAnalyticFunction& F,
                                  const BoundarySampler& boundary,
                                  double schlicht_radius, double slack = 1e-9);

/// Two distinct real points x1 in (r3, r), x2 in (0, r3) with equal extremal
/// values, following the peak construction: x1 = r3 + eps with
/// eps = (r - r3)/2, additionally capped by (r' - r3)/2 when the profile value
/// at 1 is <= 0 (r' its root past the peak); x2 is found by bisection on the
/// increasing branch, matching the profile values to 1e-12. Requires
/// r3 < r <= 1 with a workable gap (r - r3 > 1e-9); the peak itself admits no
/// collision.
std::pair<double, double> find_collision(double f0_deriv_bound,
                                         const std::vector<double>& tail_deriv_bounds,
                                         double outer_radius);

/// sup-type bound for disc self-maps: asserts (1-|z|^2)|f'(z)| <= 1 + slack on
/// a deterministic low-discrepancy sample of the disc. Throws if any sampled
/// |f(z)| exceeds 1 (self-map hypothesis).
VerificationReport check_schwarz_pick(const AnalyticFunction& f,
                                      int sample_count, double slack = 1e-9);

/// Coefficient bounds |a_n| <= M - 1/M for n = 2..max_index, via
/// taylor_coefficients. Hypotheses checked first: sampled |f| <= M on
/// |z| = 0.9, and |a_1| = 1 within 1e-6; violations raise parameter errors.
/// The witness stores the worst index in z1.real(), the coefficient in value1
/// and the cap in value2.
VerificationReport check_coefficient_bounds(const AnalyticFunction& f,
                                            double mod_bound, int max_index,
                                            double slack = 1e-9);

/// Sampled check of the defining class bounds (|f_0'| < B or |f_0| < M, and
/// the tail bounds) for a function paired with its class parameters.
/// worst_margin is the smallest bound-minus-sample over all components.
VerificationReport check_class_hypotheses(const PolyAnalyticFunction& F,
                                          const ClassParams& params,
                                          int sample_count, double slack = 1e-9);

/// Empirical injectivity estimate: largest rung of a fixed geometric radius
/// ladder such that no two distinct points of a grid_n x grid_n polar grid of
/// that disc map within 1e-12 of each other. Grid injectivity neither implies
/// nor is implied by true injectivity, so this is an estimate for consistency
/// trends, never a certificate in either direction.
double brute_force_univalence_radius(const PolyAnalyticFunction& F, int grid_n);

}  // namespace polylandau
