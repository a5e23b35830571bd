#pragma once

#include <complex>
#include <variant>
#include <vector>

namespace polylandau {

using Cplx = std::complex<double>;

/// Truncated power series a_0 + a_1 z + ... + a_N z^N.
///
/// This is an explicit finite truncation: all operations act on the stored
/// coefficients only, and results carry the truncation error of the input.
struct PowerSeries {
  std::vector<Cplx> coeffs;
  explicit PowerSeries(std::vector<Cplx> c);
};

/// Extremal for the classical Landau theorem: M z (1 - M z)/(M - z), M >= 1.
struct ClassicalLandauExtremal {
  double mod_bound;
  explicit ClassicalLandauExtremal(double bound);
};

/// Bounded map attaining the coefficient bound |a_n| = M - 1/M at index n:
/// M z (1 - M z^{n-1})/(M - z^{n-1}) with M > 1, n >= 2.
struct BlaschkeTypeExtremal {
  double mod_bound;
  int coeff_index;
  BlaschkeTypeExtremal(double bound, int index);
};

/// Analytic part of the sharp order-m extremal construction:
/// L^2 z + (L^3 - L) ln(1 - z/L) with L > 1. Its derivative is
/// L (1 - L z)/(L - z), which is unimodular-normalized at the origin and
/// bounded by L in modulus on the open unit disc.
struct LogDistortionExtremal {
  double deriv_bound;
  explicit LogDistortionExtremal(double bound);
};

/// c z.
struct ScaledIdentity {
  Cplx scale;
  explicit ScaledIdentity(Cplx c);
};

using AnalyticFunction =
    std::variant<PowerSeries, ClassicalLandauExtremal, BlaschkeTypeExtremal,
                 LogDistortionExtremal, ScaledIdentity>;

/// Evaluate f at a point of the open unit disc. The logarithm in
/// LogDistortionExtremal uses the principal branch; its argument 1 - z/L has
/// strictly positive real part on the domain, so the cut is never approached.
/// Throws std::domain_error when |z| >= 1.
Cplx eval(const AnalyticFunction& f, Cplx z);

/// Closed-form derivative of f at a point of the open unit disc.
Cplx deriv(const AnalyticFunction& f, Cplx z);

/// Taylor coefficients a_0..a_count by the discrete Cauchy integral:
/// uniform sampling of f on |z| = sample_radius with S points,
/// a_n = (1/S) sum_j f(rho e^{i theta_j}) e^{-i n theta_j} / rho^n.
/// The actual sample count is max(samples, 4*count); the quadrature error
/// decays geometrically in it. Requires count >= 1 and sample_radius in (0,1).
std::vector<Cplx> taylor_coefficients(const AnalyticFunction& f, int count,
                                      double sample_radius = 0.5,
                                      int samples = 256);

}  // namespace polylandau
