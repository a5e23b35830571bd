#pragma once

#include <utility>
#include <variant>
#include <vector>

namespace polylandau {

/// Parameters of the class with a derivative bound on the analytic part and
/// modulus bounds on the tail: |f_0'(z)| < deriv bound (> 1), |f_k(z)| <= M_k.
struct F1Params {
  double f0_deriv_bound;
  std::vector<double> tail_mod_bounds;
  explicit F1Params(double deriv_bound, std::vector<double> tail = {});
  int order() const { return 1 + static_cast<int>(tail_mod_bounds.size()); }
};

/// Modulus bound on the analytic part, derivative bounds on the tail:
/// |f_0(z)| < M (M >= 1), |f_k'(z)| <= Lambda_k.
struct F2Params {
  double f0_mod_bound;
  std::vector<double> tail_deriv_bounds;
  explicit F2Params(double mod_bound, std::vector<double> tail = {});
  int order() const { return 1 + static_cast<int>(tail_deriv_bounds.size()); }
};

/// Derivative bounds throughout: |f_0'(z)| < Lambda_0 (> 1), |f_k'(z)| <= Lambda_k.
struct F3Params {
  double f0_deriv_bound;
  std::vector<double> tail_deriv_bounds;
  explicit F3Params(double deriv_bound, std::vector<double> tail = {});
  int order() const { return 1 + static_cast<int>(tail_deriv_bounds.size()); }
};

using ClassParams = std::variant<F1Params, F2Params, F3Params>;

struct RootFindConfig {
  double tol = 1e-12;            // on the argument
  int max_iter = 200;
  double endpoint_margin = 1e-9; // clips the search interval away from the poles
};

struct RadiusResult {
  double univalence_radius;  // in (0, 1]
  double schlicht_radius;    // covering radius of the image of the univalence disc
  double residual;           // radius function at the returned root
  int iterations;
  bool whole_disc;           // radius function stayed positive up to 1; radius 1 reported
};

struct LipschitzBounds {
  double disc_radius;
  double co_lipschitz;  // l > 0
  double lipschitz;     // L >= l
};

/// Radius function of the F1 class: L(1-Lr)/(L-r) - sum_k r^k (M_k/(1-r^2) + k M_k).
/// Strictly decreasing on [0,1) with value 1 at r = 0.
double phi_f1(double r, const F1Params& p);

/// Radius function of the F2 class: 1 - (M-1/M)(2r-r^2)/(1-r)^2 - sum_k (k+1) r^k L_k.
double psi_f2(double r, const F2Params& p);

/// Radius function of the F3 class: L0(1-L0 r)/(L0-r) - sum_k (k+1) L_k r^k.
double psi_f3(double r, const F3Params& p);

/// Dispatch to the class's radius function.
double radius_function(double r, const ClassParams& p);

/// Covering-radius expression of the class evaluated at r (valid on [0, 1]):
///   F1/F3: B^2 r + (B^3 - B) ln(1 - r/B) - sum_k tail_k r^{k+1}
///   F2:    r - (M - 1/M) r^2/(1 - r) - sum_k tail_k r^{k+1}
/// At the solved univalence radius this is the schlicht radius; on [0,1] it is
/// the profile whose unique maximum sits at that radius.
double schlicht_value(const ClassParams& p, double r);

/// Univalence radius by guaranteed bisection on the strictly decreasing radius
/// function over [margin, 1 - margin], plus the schlicht radius at the root.
/// When the function is still positive at 1 - margin, radius 1 is reported
/// with whole_disc = true (Schwarz forces F(z) = z in the only such case).
RadiusResult solve_radius(const ClassParams& p, const RootFindConfig& cfg = {});

/// Classical Landau pair (r0, sigma0) = (1/(M + sqrt(M^2-1)), M r0^2), M >= 1.
std::pair<double, double> classical_landau(double mod_bound);

/// Reference constants for harmonic mappings.
struct HarmonicLandauConstants {
  double min_distortion_coeff;  // min over (0,1) of (3-r^2)/(r(1-r^2)), ~6.85
  double univalence_mod;        // pi^2 / (16 m M), modulus-bounded case
  double schlicht_mod;          // half of the above
  double univalence_deriv;      // pi / (4 (1 + Lambda)), dilatation-bounded case
  double schlicht_deriv;        // half of the above
};

/// Requires mod_bound >= 1 and deriv_bound >= 1. The minimum is located by
/// golden-section search to 1e-10 in the argument.
HarmonicLandauConstants harmonic_landau_constants(double mod_bound,
                                                  double deriv_bound);

/// Reference radii for order-m poly-analytic functions whose components all
/// satisfy f_k(0) = 0, f_k'(0) = 1, |f_k| <= M (order >= 2, M > 1). The root
/// is bracketed on (0, min(1, 1/(order-1))) because the (1-k rho)^2
/// denominators require k rho < 1. These radii are not sharp and are never
/// reported as certificates.
std::pair<double, double> uniform_modulus_radius(int order, double mod_bound,
                                                 const RootFindConfig& cfg = {});

/// Closed-form sharp radii for the order-2 derivative-bounded case
/// (|g'| <= tail_deriv_bound, |h'| < f0_deriv_bound with f0_deriv_bound > 1):
///   rho = 2 L2 / (L2(2 L1 + L2) + sqrt(L2^2 (2 L1 + L2)^2 - 8 L1 L2)),
///   sigma = L2^2 rho - L1 rho^2 + (L2^3 - L2) ln(1 - rho/L2).
/// Coincides with solve_radius on the order-2 F3 class.
std::pair<double, double> bianalytic_radius(double tail_deriv_bound,
                                            double f0_deriv_bound);

/// Closed-form sharp radii for the order-2 case with unit-normalized analytic
/// part: rho = 1 for tail bound <= 1/2, else 1/(2 bound); sigma = rho - bound rho^2.
std::pair<double, double> bianalytic_unit_radius(double tail_deriv_bound);

/// Bi-Lipschitz constants of the class on the closed disc of the given radius,
/// which must lie strictly inside the univalence radius (otherwise the
/// co-Lipschitz constant would be <= 0 and a parameter error is raised).
/// The co-Lipschitz constant is the class radius function at disc_radius; the
/// Lipschitz constant is
///   F1: L + sum_k rho^k (M_k/(1-rho^2) + k M_k)
///   F2: M/(1-rho^2) + sum_k (k+1) rho^k L_k
///   F3: L0 + sum_k (k+1) rho^k L_k.
LipschitzBounds bilipschitz(const ClassParams& p, double disc_radius);

}  // namespace polylandau
