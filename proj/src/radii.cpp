#include "polylandau/radii.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace polylandau {

namespace {

void require_unit_interval(double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("radius argument must lie in [0, 1)");
}

void require_nonnegative(const std::vector<double>& v, const char* what) {
  for (double x : v)
    if (!(x >= 0.0)) throw std::invalid_argument(what);
}

void validate_config(const RootFindConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (cfg.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  if (!(cfg.endpoint_margin > 0.0 && cfg.endpoint_margin < 0.5))
    throw std::invalid_argument("endpoint margin must lie in (0, 0.5)");
}

struct BisectOut {
  double root;
  double residual;
  int iterations;
  bool crossed;  // false when fn stayed positive on [a, b]
};

// Bisection on a continuous, strictly decreasing function with fn(a) > 0.
// Runs until the interval width reaches tol AND the residual is.below
// 5e-11, or until double resolution is exhausted, whichever comes first.
BisectOut bisect_decreasing(const std::function<double(double)>& fn, double a,
                            double b, double tol, int max_iter) {
  double fa = fn(a);
  if (!(fa > 0.0))
    throw std::runtime_error("radius function not positive at the left endpoint");
  const double fb = fn(b);
  if (fb > 0.0) return {1.0, 0.0, 2, false};

  constexpr double residual_target = 5e-11;
  double r = 0.5 * (a + b), fr = fa;
  int it = 0;
  for (;;) {
    const double mid = 0.5 * (a + b);
    if (!(mid > a && mid < b)) break;  // interval no longer representable
    if (it >= max_iter)
      throw std::runtime_error("bisection exceeded the iteration limit");
    ++it;
    const double fm = fn(mid);
    r = mid;
    fr = fm;
    if (fm > 0.0)
      a = mid;
    else
      b = mid;
    if ((b - a) <= tol && std::abs(fm) <= residual_target) break;
  }
  return {r, fr, it, true};
}

double tail_sum_kp1(const std::vector<double>& tail, double r) {
  double s = 0.0, rk = 1.0;
  for (std::size_t k = 1; k <= tail.size(); ++k) {
    rk *= r;
    s += static_cast<double>(k + 1) * rk * tail[k - 1];
  }
  return s;
}

double tail_sum_rk1(const std::vector<double>& tail, double r) {
  double s = 0.0, rk = r;
  for (std::size_t k = 1; k <= tail.size(); ++k) {
    rk *= r;  // r^{k+1}
    s += rk * tail[k - 1];
  }
  return s;
}

}  // namespace

F1Params::F1Params(double deriv_bound, std::vector<double> tail)
    : f0_deriv_bound(deriv_bound), tail_mod_bounds(std::move(tail)) {
  if (!(deriv_bound > 1.0))
    throw std::invalid_argument("F1: derivative bound must exceed 1");
  require_nonnegative(tail_mod_bounds, "F1: tail modulus bounds must be nonnegative");
}

F2Params::F2Params(double mod_bound, std::vector<double> tail)
    : f0_mod_bound(mod_bound), tail_deriv_bounds(std::move(tail)) {
  if (!(mod_bound >= 1.0))
    throw std::invalid_argument("F2: modulus bound must be at least 1");
  require_nonnegative(tail_deriv_bounds, "F2: tail derivative bounds must be nonnegative");
}

F3Params::F3Params(double deriv_bound, std::vector<double> tail)
    : f0_deriv_bound(deriv_bound), tail_deriv_bounds(std::move(tail)) {
  if (!(deriv_bound > 1.0))
    throw std::invalid_argument("F3: derivative bound must exceed 1");
  require_nonnegative(tail_deriv_bounds, "F3: tail derivative bounds must be nonnegative");
}

double phi_f1(double r, const F1Params& p) {
  require_unit_interval(r);
  const double L = p.f0_deriv_bound;
  double v = L * (1.0 - L * r) / (L - r);
  double rk = 1.0;
  for (std::size_t k = 1; k <= p.tail_mod_bounds.size(); ++k) {
    rk *= r;
    const double Mk = p.tail_mod_bounds[k - 1];
    v -= rk * (Mk / (1.0 - r * r) + static_cast<double>(k) * Mk);
  }
  return v;
}

double psi_f2(double r, const F2Params& p) {
  require_unit_interval(r);
  const double gap = p.f0_mod_bound - 1.0 / p.f0_mod_bound;
  double v = 1.0;
  if (gap != 0.0) {
    const double om = 1.0 - r;
    v -= gap * (2.0 * r - r * r) / (om * om);
  }
  return v - tail_sum_kp1(p.tail_deriv_bounds, r);
}

double psi_f3(double r, const F3Params& p) {
  require_unit_interval(r);
  const double L = p.f0_deriv_bound;
  return L * (1.0 - L * r) / (L - r) - tail_sum_kp1(p.tail_deriv_bounds, r);
}

double radius_function(double r, const ClassParams& p) {
  return std::visit(
      [r](const auto& q) -> double {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, F1Params>) return phi_f1(r, q);
        else if constexpr (std::is_same_v<T, F2Params>) return psi_f2(r, q);
        else return psi_f3(r, q);
      },
      p);
}

double schlicht_value(const ClassParams& p, double r) {
  if (!(r >= 0.0 && r <= 1.0))
    throw std::domain_error("radius argument must lie in [0, 1]");
  return std::visit(
      [r](const auto& q) -> double {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, F2Params>) {
          const double gap = q.f0_mod_bound - 1.0 / q.f0_mod_bound;
          double v = r;
          if (gap != 0.0) v -= gap * r * r / (1.0 - r);
          return v - tail_sum_rk1(q.tail_deriv_bounds, r);
        } else {
          const double B = q.f0_deriv_bound;
          double v = B * B * r + (B * B * B - B) * std::log1p(-r / B);
          if constexpr (std::is_same_v<T, F1Params>)
            return v - tail_sum_rk1(q.tail_mod_bounds, r);
          else
            return v - tail_sum_rk1(q.tail_deriv_bounds, r);
        }
      },
      p);
}

RadiusResult solve_radius(const ClassParams& p, const RootFindConfig& cfg) {
  validate_config(cfg);
  const BisectOut out = bisect_decreasing(
      [&p](double r) { return radius_function(r, p); }, cfg.endpoint_margin,
      1.0 - cfg.endpoint_margin, cfg.tol, cfg.max_iter);
  RadiusResult res;
  res.univalence_radius = out.root;
  res.schlicht_radius = schlicht_value(p, out.root);
  res.residual = out.residual;
  res.iterations = out.iterations;
  res.whole_disc = !out.crossed;
  return res;
}

std::pair<double, double> classical_landau(double mod_bound) {
  if (!(mod_bound >= 1.0))
    throw std::invalid_argument("modulus bound must be at least 1");
  const double r0 =
      1.0 / (mod_bound + std::sqrt(mod_bound * mod_bound - 1.0));
  return {r0, mod_bound * r0 * r0};
}

HarmonicLandauConstants harmonic_landau_constants(double mod_bound,
                                                  double deriv_bound) {
  if (!(mod_bound >= 1.0))
    throw std::invalid_argument("modulus bound must be at least 1");
  if (!(deriv_bound >= 1.0))
    throw std::invalid_argument("derivative bound must be at least 1");

  const auto h = [](double r) {
    return (3.0 - r * r) / (r * (1.0 - r * r));
  };
  // Golden-section search; h is unimodal on (0, 1) with one interior minimum.
  const double invphi = 0.6180339887498949;
  double a = 1e-3, b = 1.0 - 1e-3;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = h(c), fd = h(d);
  while ((b - a) > 1e-10) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = h(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = h(d);
    }
  }
  const double m_const = h(0.5 * (a + b));

  HarmonicLandauConstants out;
  out.min_distortion_coeff = m_const;
  const double pi = 3.14159265358979323846;
  out.univalence_mod = pi * pi / (16.0 * m_const * mod_bound);
  out.schlicht_mod = 0.5 * out.univalence_mod;
  out.univalence_deriv = pi / (4.0 * (1.0 + deriv_bound));
  out.schlicht_deriv = 0.5 * out.univalence_deriv;
  return out;
}

std::pair<double, double> uniform_modulus_radius(int order, double mod_bound,
                                                 const RootFindConfig& cfg) {
  if (order < 2) throw std::invalid_argument("order must be at least 2");
  if (!(mod_bound > 1.0))
    throw std::invalid_argument("modulus bound must exceed 1");
  validate_config(cfg);

  const auto fn = [order, mod_bound](double rho) {
    double s = rho * (2.0 - rho) / ((1.0 - rho) * (1.0 - rho));
    double rk = 1.0;
    for (int k = 1; k <= order - 1; ++k) {
      rk *= rho;
      const double kk = static_cast<double>(k);
      const double den = 1.0 - kk * rho;
      s += rk * (1.0 + kk - kk * rho) / (den * den);
    }
    return 1.0 - mod_bound * s;
  };

  const double upper =
      std::min(1.0, 1.0 / static_cast<double>(order - 1)) - cfg.endpoint_margin;
  const BisectOut out =
      bisect_decreasing(fn, cfg.endpoint_margin, upper, cfg.tol, cfg.max_iter);
  if (!out.crossed)
    throw std::runtime_error("radius equation has no root in the search interval");
  const double rho = out.root;

  double geo = 0.0, rj = 1.0;  // sum_{j=0}^{order-2} rho^j
  for (int j = 0; j <= order - 2; ++j) {
    geo += rj;
    rj *= rho;
  }
  double tail = 0.0, rk = rho * rho;  // sum_{k=0}^{order-1} rho^{k+2}
  for (int k = 0; k <= order - 1; ++k) {
    tail += rk;
    rk *= rho;
  }
  const double sigma = rho - rho * rho * geo - mod_bound * tail / (1.0 - rho);
  return {rho, sigma};
}

std::pair<double, double> bianalytic_radius(double tail_deriv_bound,
                                            double f0_deriv_bound) {
  if (!(tail_deriv_bound >= 0.0))
    throw std::invalid_argument("tail derivative bound must be nonnegative");
  if (!(f0_deriv_bound > 1.0))
    throw std::invalid_argument("analytic-part derivative bound must exceed 1");
  const double L1 = tail_deriv_bound, L2 = f0_deriv_bound;
  const double b = L2 * (2.0 * L1 + L2);
  const double rho = 2.0 * L2 / (b + std::sqrt(b * b - 8.0 * L1 * L2));
  const double sigma = L2 * L2 * rho - L1 * rho * rho +
                       (L2 * L2 * L2 - L2) * std::log1p(-rho / L2);
  return {rho, sigma};
}

std::pair<double, double> bianalytic_unit_radius(double tail_deriv_bound) {
  if (!(tail_deriv_bound >= 0.0))
    throw std::invalid_argument("tail derivative bound must be nonnegative");
  const double rho =
      tail_deriv_bound <= 0.5 ? 1.0 : 1.0 / (2.0 * tail_deriv_bound);
  return {rho, rho - tail_deriv_bound * rho * rho};
}

LipschitzBounds bilipschitz(const ClassParams& p, double disc_radius) {
  const RadiusResult rr = solve_radius(p);
  if (!(disc_radius > 0.0 && disc_radius < rr.univalence_radius))
    throw std::invalid_argument(
        "disc radius must lie strictly inside the univalence radius");
  const double rho = disc_radius;
  const double lower = radius_function(rho, p);
  const double upper = std::visit(
      [rho](const auto& q) -> double {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, F1Params>) {
          double s = q.f0_deriv_bound;
          double rk = 1.0;
          for (std::size_t k = 1; k <= q.tail_mod_bounds.size(); ++k) {
            rk *= rho;
            const double Mk = q.tail_mod_bounds[k - 1];
            s += rk * (Mk / (1.0 - rho * rho) + static_cast<double>(k) * Mk);
          }
          return s;
        } else if constexpr (std::is_same_v<T, F2Params>) {
          return q.f0_mod_bound / (1.0 - rho * rho) +
                 tail_sum_kp1(q.tail_deriv_bounds, rho);
        } else {
          return q.f0_deriv_bound + tail_sum_kp1(q.tail_deriv_bounds, rho);
        }
      },
      p);
  return {rho, lower, upper};
}

}  // namespace polylandau
