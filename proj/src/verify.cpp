#include "polylandau/verify.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace polylandau {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Deterministic low-discrepancy point of the disc of radius max_r:
// Fibonacci-spiral layout, no RNG involved.
Cplx spiral_point(int i, int n, double max_r) {
  const double frac = std::fmod(i * 0.6180339887498949, 1.0);
  const double r = max_r * std::sqrt((i + 0.5) / n);
  return std::polar(r, 2.0 * std::numbers::pi * frac);
}

void require_normalized(const PolyAnalyticFunction& F, const char* check) {
  if (!F.normalized())
    throw std::invalid_argument(std::string(check) +
                                " requires a normalized function");
}

}  // namespace

PairSampler::PairSampler(std::uint64_t seed_, int count_, double disc_radius_)
    : seed(seed_), count(count_), disc_radius(disc_radius_) {
  if (count < 1) throw std::invalid_argument("pair count must be at least 1");
  if (!(disc_radius > 0.0 && disc_radius < 1.0))
    throw std::invalid_argument("sampling radius must lie in (0, 1)");
}

BoundarySampler::BoundarySampler(double radius_, int point_count_)
    : radius(radius_), point_count(point_count_) {
  if (point_count < 8)
    throw std::invalid_argument("boundary sampler needs at least 8 points");
  if (!(radius > 0.0 && radius < 1.0))
    throw std::invalid_argument("boundary radius must lie in (0, 1)");
}

VerificationReport check_colipschitz(const PolyAnalyticFunction& F,
                                     const PairSampler& sampler,
                                     double co_lipschitz, double slack) {
  require_normalized(F, "colipschitz check");
  VerificationReport rep;
  rep.check_name = "colipschitz";
  rep.slack = slack;
  rep.worst_margin = kInf;
  Witness w;
  sampler.for_each_pair([&](Cplx z1, Cplx z2) {
    const Cplx w1 = eval_poly(F, z1), w2 = eval_poly(F, z2);
    const double margin = std::abs(w1 - w2) - co_lipschitz * std::abs(z1 - z2);
    ++rep.samples_used;
    if (margin < rep.worst_margin) {
      rep.worst_margin = margin;
      w = {z1, z2, w1, w2};
    }
  });
  rep.witness = w;
  rep.passed = rep.worst_margin >= -slack;
  return rep;
}

VerificationReport check_lipschitz(const PolyAnalyticFunction& F,
                                   const PairSampler& sampler, double lipschitz,
                                   double slack) {
  require_normalized(F, "lipschitz check");
  VerificationReport rep;
  rep.check_name = "lipschitz";
  rep.slack = slack;
  rep.worst_margin = kInf;
  Witness w;
  sampler.for_each_pair([&](Cplx z1, Cplx z2) {
    const Cplx w1 = eval_poly(F, z1), w2 = eval_poly(F, z2);
    const double margin = lipschitz * std::abs(z1 - z2) - std::abs(w1 - w2);
    ++rep.samples_used;
    if (margin < rep.worst_margin) {
      rep.worst_margin = margin;
      w = {z1, z2, w1, w2};
    }
  });
  rep.witness = w;
  rep.passed = rep.worst_margin >= -slack;
  return rep;
}

VerificationReport check_schlicht(const PolyAnalyticFunction& F,
                                  const BoundarySampler& boundary,
                                  double schlicht_radius, double slack) {
  require_normalized(F, "schlicht check");
  VerificationReport rep;
  rep.check_name = "schlicht";
  rep.slack = slack;
  double best = kInf;
  int argmin = 0;
  Cplx best_value = 0.0;
  for (int j = 0; j < boundary.point_count; ++j) {
    const Cplx v = eval_poly(F, boundary.point(j));
    const double a = std::abs(v);
    ++rep.samples_used;
    if (a < best) {
      best = a;
      argmin = j;
      best_value = v;
    }
  }
  rep.worst_margin = best - schlicht_radius;
  rep.witness = Witness{boundary.point(argmin), 0.0, best_value, Cplx(best, 0.0)};
  rep.passed = rep.worst_margin >= -slack;
  return rep;
}

std::pair<double, double> find_collision(
    double f0_deriv_bound, const std::vector<double>& tail_deriv_bounds,
    double outer_radius) {
  const F3Params params(f0_deriv_bound, tail_deriv_bounds);
  const ClassParams cp = params;
  const double r3 = solve_radius(cp).univalence_radius;
  if (!(outer_radius > r3 + 1e-9 && outer_radius <= 1.0))
    throw std::invalid_argument(
        "collision search needs an outer radius strictly between the "
        "univalence radius and 1");

  const auto g = [&cp](double x) { return schlicht_value(cp, x); };

  // The profile g increases on [0, r3] and decreases on [r3, 1]. Pick x1 past
  // the peak but before g returns to zero, so a partner exists below the peak.
  double eps = 0.5 * (outer_radius - r3);
  if (g(1.0) <= 0.0) {
    double lo = r3, hi = 1.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-14; ++i) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) > 0.0 ? lo : hi) = mid;
    }
    eps = std::min(eps, 0.5 * (0.5 * (lo + hi) - r3));
  }
  const double x1 = r3 + eps;
  const double target = g(x1);
  if (!(target >= 0.0))
    throw std::runtime_error("no matching point on the increasing branch");

  double lo = 0.0, hi = r3;
  double x2 = 0.5 * (lo + hi);
  for (int i = 0; i < 240; ++i) {
    x2 = 0.5 * (lo + hi);
    if (!(x2 > lo && x2 < hi)) break;
    const double gv = g(x2);
    if (std::abs(gv - target) <= 1e-13) break;
    (gv < target ? lo : hi) = x2;
  }
  return {x1, x2};
}

VerificationReport check_schwarz_pick(const AnalyticFunction& f,
                                      int sample_count, double slack) {
  if (sample_count < 1)
    throw std::invalid_argument("sample count must be at least 1");
  VerificationReport rep;
  rep.check_name = "schwarz_pick";
  rep.slack = slack;
  rep.worst_margin = kInf;
  Witness w;
  for (int i = 0; i < sample_count; ++i) {
    const Cplx z = spiral_point(i, sample_count, 0.999);
    if (std::abs(eval(f, z)) > 1.0)
      throw std::invalid_argument(
          "sampled |f| exceeds 1: not a disc self-map");
    const Cplx d = deriv(f, z);
    const double value = (1.0 - std::norm(z)) * std::abs(d);
    const double margin = 1.0 - value;
    ++rep.samples_used;
    if (margin < rep.worst_margin) {
      rep.worst_margin = margin;
      w = {z, 0.0, d, Cplx(value, 0.0)};
    }
  }
  rep.witness = w;
  rep.passed = rep.worst_margin >= -slack;
  return rep;
}

VerificationReport check_coefficient_bounds(const AnalyticFunction& f,
                                            double mod_bound, int max_index,
                                            double slack) {
  if (!(mod_bound >= 1.0))
    throw std::invalid_argument("modulus bound must be at least 1");
  if (max_index < 2)
    throw std::invalid_argument("max coefficient index must be at least 2");
  for (int j = 0; j < 256; ++j) {
    const Cplx z = std::polar(0.9, 2.0 * std::numbers::pi * j / 256);
    if (std::abs(eval(f, z)) > mod_bound + 1e-12)
      throw std::invalid_argument("sampled modulus exceeds the stated bound");
  }
  const std::vector<Cplx> a = taylor_coefficients(f, max_index);
  if (std::abs(std::abs(a[1]) - 1.0) > 1e-6)
    throw std::invalid_argument("first coefficient must have unit modulus");

  const double cap = mod_bound - 1.0 / mod_bound;
  VerificationReport rep;
  rep.check_name = "coefficient_bounds";
  rep.slack = slack;
  rep.worst_margin = kInf;
  Witness w;
  for (int n = 2; n <= max_index; ++n) {
    const double margin = cap - std::abs(a[n]);
    ++rep.samples_used;
    if (margin < rep.worst_margin) {
      rep.worst_margin = margin;
      w = {Cplx(static_cast<double>(n), 0.0), 0.0, a[n], Cplx(cap, 0.0)};
    }
  }
  rep.witness = w;
  rep.passed = rep.worst_margin >= -slack;
  return rep;
}

VerificationReport check_class_hypotheses(const PolyAnalyticFunction& F,
                                          const ClassParams& params,
                                          int sample_count, double slack) {
  const int order = std::visit([](const auto& q) { return q.order(); }, params);
  if (order != F.order())
    throw std::invalid_argument("component count differs from the class order");
  if (sample_count < 1)
    throw std::invalid_argument("sample count must be at least 1");

  VerificationReport rep;
  rep.check_name = "class_hypotheses";
  rep.slack = slack;
  rep.worst_margin = kInf;
  Witness w;
  const auto consider = [&](double bound, double sample, Cplx z, Cplx value) {
    const double margin = bound - sample;
    if (margin < rep.worst_margin) {
      rep.worst_margin = margin;
      w = {z, 0.0, value, Cplx(bound, 0.0)};
    }
  };

  for (int i = 0; i < sample_count; ++i) {
    const Cplx z = spiral_point(i, sample_count, 0.999);
    ++rep.samples_used;
    std::visit(
        [&](const auto& q) {
          using T = std::decay_t<decltype(q)>;
          const auto& comps = F.components();
          if constexpr (std::is_same_v<T, F1Params>) {
            const Cplx d0 = deriv(comps[0], z);
            consider(q.f0_deriv_bound, std::abs(d0), z, d0);
            for (std::size_t k = 1; k < comps.size(); ++k) {
              const Cplx v = eval(comps[k], z);
              consider(q.tail_mod_bounds[k - 1], std::abs(v), z, v);
            }
          } else if constexpr (std::is_same_v<T, F2Params>) {
            const Cplx v0 = eval(comps[0], z);
            consider(q.f0_mod_bound, std::abs(v0), z, v0);
            for (std::size_t k = 1; k < comps.size(); ++k) {
              const Cplx d = deriv(comps[k], z);
              consider(q.tail_deriv_bounds[k - 1], std::abs(d), z, d);
            }
          } else {
            const Cplx d0 = deriv(comps[0], z);
            consider(q.f0_deriv_bound, std::abs(d0), z, d0);
            for (std::size_t k = 1; k < comps.size(); ++k) {
              const Cplx d = deriv(comps[k], z);
              consider(q.tail_deriv_bounds[k - 1], std::abs(d), z, d);
            }
          }
        },
        params);
  }
  rep.witness = w;
  rep.passed = rep.worst_margin >= -slack;
  return rep;
}

double brute_force_univalence_radius(const PolyAnalyticFunction& F,
                                     int grid_n) {
  if (grid_n < 16) throw std::invalid_argument("grid must be at least 16x16");
  constexpr int kRungs = 40;
  constexpr double kLo = 0.10, kHi = 0.99;

  std::vector<Cplx> image(static_cast<std::size_t>(grid_n) * grid_n);
  double best = 0.0;
  for (int s = 0; s < kRungs; ++s) {
    const double r = kLo * std::pow(kHi / kLo, static_cast<double>(s) / (kRungs - 1));
    std::size_t idx = 0;
    for (int j = 0; j < grid_n; ++j) {
      const double rad = r * (j + 1) / grid_n;
      for (int k = 0; k < grid_n; ++k)
        image[idx++] =
            eval_poly(F, std::polar(rad, 2.0 * std::numbers::pi * k / grid_n));
    }
    for (std::size_t a = 0; a < image.size(); ++a)
      for (std::size_t b = a + 1; b < image.size(); ++b)
        if (std::abs(image[a] - image[b]) <= 1e-12) return best;
    best = r;
  }
  return best;
}

}  // namespace polylandau
