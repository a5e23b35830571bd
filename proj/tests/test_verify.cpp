#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "polylandau/verify.hpp"

using namespace polylandau;

namespace {

// Test-side profile of the extremal on the real axis.
double g_profile(double bound, const std::vector<double>& tail, double x) {
  double v = bound * bound * x +
             (bound * bound * bound - bound) * std::log(1.0 - x / bound);
  double xp = x;
  for (double lk : tail) {
    xp *= x;
    v -= lk * xp;
  }
  return v;
}

// Test-side oracle: invert the increasing branch of g by bisection.
double invert_increasing(double bound, const std::vector<double>& tail,
                         double peak, double target) {
  double lo = 0.0, hi = peak;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g_profile(bound, tail, mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("pair sampler determinism and invariants") {
  const PairSampler a(1234, 16, 0.4);
  const PairSampler b(1234, 16, 0.4);
  std::vector<Cplx> seq_a, seq_b;
  a.for_each_pair([&](Cplx z1, Cplx z2) {
    seq_a.push_back(z1);
    seq_a.push_back(z2);
  });
  b.for_each_pair([&](Cplx z1, Cplx z2) {
    seq_b.push_back(z1);
    seq_b.push_back(z2);
  });
  REQUIRE(seq_a.size() == 32);
  CHECK(seq_a == seq_b);
  for (const Cplx& z : seq_a) CHECK(std::abs(z) <= 0.4);

  CHECK_THROWS_AS(PairSampler(1, 0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(PairSampler(1, 10, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(BoundarySampler(0.5, 7), std::invalid_argument);
  CHECK_THROWS_AS(BoundarySampler(1.0, 16), std::invalid_argument);
}

TEST_CASE("colipschitz check") {
  const PolyAnalyticFunction id({ScaledIdentity(1.0)});
  const PairSampler sampler(42, 5000, 0.5);

  const VerificationReport eq = check_colipschitz(id, sampler, 1.0);
  CHECK(eq.passed);
  CHECK(std::abs(eq.worst_margin) < 1e-12);
  CHECK(eq.samples_used == 5000);

  // negative control: a constant above 1 must fail with a witness
  const VerificationReport bad = check_colipschitz(id, sampler, 1.1);
  CHECK(!bad.passed);
  CHECK(bad.worst_margin < 0.0);
  REQUIRE(bad.witness.has_value());
  CHECK(std::abs(bad.witness->value1 - bad.witness->z1) < 1e-15);

  const PolyAnalyticFunction F0 = make_extremal_F0(2.0, {});
  const LipschitzBounds near = bilipschitz(F3Params(2.0), 0.25);
  CHECK(check_colipschitz(F0, PairSampler(7, 20000, 0.25), near.co_lipschitz)
            .passed);

  const LipschitzBounds tight = bilipschitz(F3Params(2.0), 0.49);
  CHECK(tight.co_lipschitz == doctest::Approx(0.04 / 1.51).epsilon(1e-12));
  const VerificationReport close =
      check_colipschitz(F0, PairSampler(7, 20000, 0.49), tight.co_lipschitz);
  CHECK(close.passed);
  CHECK(close.worst_margin >= 0.0);

  const PolyAnalyticFunction off({ScaledIdentity(Cplx(2.0, 0.0))});
  CHECK_THROWS_AS(check_colipschitz(off, sampler, 1.0), std::invalid_argument);
}

TEST_CASE("lipschitz check") {
  const PolyAnalyticFunction id({ScaledIdentity(1.0)});
  const PairSampler sampler(42, 5000, 0.5);
  const VerificationReport eq = check_lipschitz(id, sampler, 1.0);
  CHECK(eq.passed);
  CHECK(std::abs(eq.worst_margin) < 1e-12);

  const PolyAnalyticFunction F0 = make_extremal_F0(2.0, {1.0});
  CHECK(check_lipschitz(F0, PairSampler(9, 20000, 0.2), 2.4).passed);

  const PolyAnalyticFunction blaschke({BlaschkeTypeExtremal(2.0, 2)});
  const double L2 = 2.0 / (1.0 - 0.09);
  CHECK(check_lipschitz(blaschke, PairSampler(11, 20000, 0.3), L2).passed);
}

TEST_CASE("schlicht coverage check") {
  const PolyAnalyticFunction id({ScaledIdentity(1.0)});
  const VerificationReport eq = check_schlicht(id, BoundarySampler(0.5, 64), 0.5);
  CHECK(eq.passed);
  CHECK(std::abs(eq.worst_margin) < 1e-15);

  const PolyAnalyticFunction F0 = make_extremal_F0(2.0, {});
  const double R3 = 2.0 + 6.0 * std::log(0.75);
  const VerificationReport sharp =
      check_schlicht(F0, BoundarySampler(0.5, 720), R3);
  CHECK(sharp.passed);
  CHECK(std::abs(sharp.worst_margin) < 1e-6);  // the minimum is attained
  REQUIRE(sharp.witness.has_value());
  CHECK(std::abs(std::arg(sharp.witness->z1)) < 2.0 * 3.15 / 720);

  const double r3t = 2.0 - std::sqrt(3.0);
  const PolyAnalyticFunction F0t = make_extremal_F0(2.0, {1.0});
  const VerificationReport sharp_t =
      check_schlicht(F0t, BoundarySampler(r3t, 720), g_profile(2.0, {1.0}, r3t));
  CHECK(sharp_t.passed);
  CHECK(std::abs(sharp_t.worst_margin) < 1e-6);
}

TEST_CASE("collision construction") {
  // reference: outer radius 0.7 puts the near point at 0.6
  auto [x1, x2] = find_collision(2.0, {}, 0.7);
  CHECK(x1 == doctest::Approx(0.6).epsilon(1e-9));
  CHECK(x2 == doctest::Approx(0.3954).epsilon(1e-3));
  const double oracle_x2 = invert_increasing(2.0, {}, 0.5, g_profile(2.0, {}, x1));
  CHECK(x2 == doctest::Approx(oracle_x2).epsilon(1e-9));
  CHECK(std::abs(g_profile(2.0, {}, x1) - g_profile(2.0, {}, x2)) <= 1e-12);

  const PolyAnalyticFunction F0 = make_extremal_F0(2.0, {});
  CHECK(std::abs(eval_poly(F0, x1) - eval_poly(F0, x2)) <= 1e-9);

  // no collision at the peak itself
  CHECK_THROWS_AS(find_collision(2.0, {}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(find_collision(2.0, {}, 0.4), std::invalid_argument);

  // with a tail
  const double r3t = 2.0 - std::sqrt(3.0);
  auto [y1, y2] = find_collision(2.0, {1.0}, r3t + 0.05);
  CHECK(y1 > r3t);
  CHECK(y2 < r3t);
  CHECK(std::abs(y1 - y2) >= 1e-3);
  const PolyAnalyticFunction F0t = make_extremal_F0(2.0, {1.0});
  CHECK(std::abs(eval_poly(F0t, y1) - eval_poly(F0t, y2)) <= 1e-9);
}

TEST_CASE("schwarz-pick check") {
  const VerificationReport lin = check_schwarz_pick(ScaledIdentity(1.0), 2000);
  CHECK(lin.passed);
  CHECK(lin.worst_margin >= 0.0);

  // z^2: the supremum of 2|z|(1-|z|^2) is 4/(3 sqrt 3) < 1
  const VerificationReport sq = check_schwarz_pick(
      PowerSeries({Cplx(0, 0), Cplx(0, 0), Cplx(1, 0)}), 2000);
  CHECK(sq.passed);
  CHECK(sq.worst_margin >= 1.0 - 4.0 / (3.0 * std::sqrt(3.0)) - 1e-9);

  // disc automorphism (z + a)/(1 + a z) as a series truncation:
  // a + (1 - a^2) sum_{n>=1} (-a)^{n-1} z^n
  const double a = 0.5;
  std::vector<Cplx> coeffs{Cplx(a, 0.0)};
  double sign = 1.0;
  for (int n = 1; n <= 48; ++n) {
    coeffs.push_back(Cplx((1.0 - a * a) * sign, 0.0));
    sign *= -a;
  }
  const VerificationReport mob = check_schwarz_pick(PowerSeries(coeffs), 2000);
  CHECK(mob.passed);
  CHECK(mob.worst_margin >= -1e-9);

  CHECK_THROWS_AS(check_schwarz_pick(ScaledIdentity(Cplx(2.0, 0.0)), 100),
                  std::invalid_argument);
}

TEST_CASE("coefficient bound check") {
  const VerificationReport lin =
      check_coefficient_bounds(ScaledIdentity(1.0), 1.0, 6);
  CHECK(lin.passed);
  CHECK(std::abs(lin.worst_margin) < 1e-10);  // 0 <= M - 1/M = 0

  const VerificationReport sharp =
      check_coefficient_bounds(BlaschkeTypeExtremal(2.0, 2), 2.0, 4);
  CHECK(sharp.passed);
  CHECK(std::abs(sharp.worst_margin) < 1e-8);  // equality at index 2

  const VerificationReport gap =
      check_coefficient_bounds(BlaschkeTypeExtremal(2.0, 3), 2.0, 3);
  CHECK(gap.passed);
  REQUIRE(gap.witness.has_value());
  CHECK(gap.witness->z1.real() == 3.0);  // worst index is the sharp one
  const auto coeffs = taylor_coefficients(BlaschkeTypeExtremal(2.0, 3), 3);
  CHECK(std::abs(coeffs[2]) < 1e-8);
  CHECK(std::abs(std::abs(coeffs[3]) - 1.5) < 1e-8);

  // hypothesis failures are parameter errors, not failed reports
  CHECK_THROWS_AS(check_coefficient_bounds(ScaledIdentity(Cplx(0.5, 0)), 1.0, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_coefficient_bounds(BlaschkeTypeExtremal(2.0, 2), 1.2, 4),
                  std::invalid_argument);
}

TEST_CASE("class hypothesis check") {
  const PolyAnalyticFunction F0 = make_extremal_F0(2.0, {1.0});
  const ClassParams p3 = F3Params(2.0, {1.0});
  const VerificationReport h3 = check_class_hypotheses(F0, p3, 500);
  CHECK(h3.passed);

  const PolyAnalyticFunction w2(
      {BlaschkeTypeExtremal(2.0, 2), ScaledIdentity(Cplx(0.5, 0))});
  CHECK(check_class_hypotheses(w2, F2Params(2.0, {0.5}), 500).passed);

  const PolyAnalyticFunction w1(
      {LogDistortionExtremal(2.0), ScaledIdentity(Cplx(1.0, 0))});
  CHECK(check_class_hypotheses(w1, F1Params(2.0, {1.0}), 500).passed);

  // violated bound is detected
  const VerificationReport bad =
      check_class_hypotheses(w1, F1Params(1.5, {1.0}), 500);
  CHECK(!bad.passed);

  CHECK_THROWS_AS(check_class_hypotheses(F0, F3Params(2.0), 500),
                  std::invalid_argument);
}

TEST_CASE("grid injectivity estimate") {
  const PolyAnalyticFunction id({ScaledIdentity(1.0)});
  CHECK(brute_force_univalence_radius(id, 16) == doctest::Approx(0.99));

  // never reported below the certified radius (up to one ladder rung)
  const PolyAnalyticFunction F0 = make_extremal_F0(2.0, {});
  const double estimate = brute_force_univalence_radius(F0, 16);
  const double rung_ratio = std::pow(0.99 / 0.10, 1.0 / 39.0);
  CHECK(estimate >= 0.5 / rung_ratio);

  CHECK_THROWS_AS(brute_force_univalence_radius(id, 8), std::invalid_argument);
}

TEST_CASE("reports are deterministic") {
  const PolyAnalyticFunction F0 = make_extremal_F0(2.0, {1.0});
  const LipschitzBounds lb = bilipschitz(F3Params(2.0, {1.0}), 0.2);
  const VerificationReport a =
      check_colipschitz(F0, PairSampler(99, 10000, 0.2), lb.co_lipschitz);
  const VerificationReport b =
      check_colipschitz(F0, PairSampler(99, 10000, 0.2), lb.co_lipschitz);
  CHECK(a.worst_margin == b.worst_margin);
  CHECK(a.witness->z1 == b.witness->z1);
  CHECK(a.witness->z2 == b.witness->z2);
  CHECK(a.passed == b.passed);
  CHECK(a.samples_used == b.samples_used);
}
