#include "polylandau/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polylandau {

namespace {

void require_in_disc(Cplx z) {
  if (!(std::abs(z) < 1.0))
    throw std::domain_error("evaluation point must lie in the open unit disc");
}

Cplx pow_int(Cplx z, int k) {
  Cplx p = 1.0;
  for (int i = 0; i < k; ++i) p *= z;
  return p;
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Cplx> c) : coeffs(std::move(c)) {
  if (coeffs.empty())
    throw std::invalid_argument("power series needs at least one coefficient");
  for (const Cplx& a : coeffs)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::invalid_argument("power series coefficients must be finite");
}

ClassicalLandauExtremal::ClassicalLandauExtremal(double bound)
    : mod_bound(bound) {
  if (!(bound >= 1.0))
    throw std::invalid_argument("modulus bound must be at least 1");
}

BlaschkeTypeExtremal::BlaschkeTypeExtremal(double bound, int index)
    : mod_bound(bound), coeff_index(index) {
  if (!(bound > 1.0))
    throw std::invalid_argument("modulus bound must exceed 1");
  if (index < 2)
    throw std::invalid_argument("coefficient index must be at least 2");
}

LogDistortionExtremal::LogDistortionExtremal(double bound)
    : deriv_bound(bound) {
  if (!(bound > 1.0))
    throw std::invalid_argument("derivative bound must exceed 1");
}

ScaledIdentity::ScaledIdentity(Cplx c) : scale(c) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
    throw std::invalid_argument("scale must be finite");
}

Cplx eval(const AnalyticFunction& f, Cplx z) {
  require_in_disc(z);
  return std::visit(
      [z](const auto& v) -> Cplx {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PowerSeries>) {
          Cplx acc = 0.0;
          for (int n = static_cast<int>(v.coeffs.size()) - 1; n >= 0; --n)
            acc = acc * z + v.coeffs[n];
          return acc;
        } else if constexpr (std::is_same_v<T, ClassicalLandauExtremal>) {
          const double M = v.mod_bound;
          return M * z * (1.0 - M * z) / (M - z);
        } else if constexpr (std::is_same_v<T, BlaschkeTypeExtremal>) {
          const double M = v.mod_bound;
          const Cplx w = pow_int(z, v.coeff_index - 1);
          return M * z * (1.0 - M * w) / (M - w);
        } else if constexpr (std::is_same_v<T, LogDistortionExtremal>) {
          const double L = v.deriv_bound;
          return L * L * z + (L * L * L - L) * std::log(1.0 - z / L);
        } else {
          return v.scale * z;
        }
      },
      f);
}

Cplx deriv(const AnalyticFunction& f, Cplx z) {
  require_in_disc(z);
  return std::visit(
      [z](const auto& v) -> Cplx {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PowerSeries>) {
          Cplx acc = 0.0;
          for (int n = static_cast<int>(v.coeffs.size()) - 1; n >= 1; --n)
            acc = acc * z + static_cast<double>(n) * v.coeffs[n];
          return acc;
        } else if constexpr (std::is_same_v<T, ClassicalLandauExtremal>) {
          const double M = v.mod_bound;
          const Cplx den = M - z;
          return M * M * (1.0 - 2.0 * M * z + z * z) / (den * den);
        } else if constexpr (std::is_same_v<T, BlaschkeTypeExtremal>) {
          const double M = v.mod_bound;
          const int n = v.coeff_index;
          const Cplx wm = pow_int(z, n - 2);  // z^{n-2}
          const Cplx w = wm * z;              // z^{n-1}
          const Cplx num = M * z * (1.0 - M * w);
          const Cplx dnum = M - static_cast<double>(n) * M * M * w;
          const Cplx den = M - w;
          const Cplx dden = -static_cast<double>(n - 1) * wm;
          return (dnum * den - num * dden) / (den * den);
        } else if constexpr (std::is_same_v<T, LogDistortionExtremal>) {
          const double L = v.deriv_bound;
          return L * (1.0 - L * z) / (L - z);
        } else {
          return v.scale;
        }
      },
      f);
}

std::vector<Cplx> taylor_coefficients(const AnalyticFunction& f, int count,
                                      double sample_radius, int samples) {
  if (count < 1) throw std::invalid_argument("coefficient count must be >= 1");
  if (!(sample_radius > 0.0 && sample_radius < 1.0))
    throw std::domain_error("sample radius must lie in (0, 1)");

  const int S = std::max(samples, 4 * count);
  std::vector<Cplx> values(S), rot(S), cur(S, 1.0);
  for (int j = 0; j < S; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / S;
    values[j] = eval(f, std::polar(sample_radius, theta));
    rot[j] = std::polar(1.0, -theta);
  }

  std::vector<Cplx> out(count + 1);
  double radius_pow = 1.0;
  for (int n = 0; n <= count; ++n) {
    Cplx acc = 0.0;
    for (int j = 0; j < S; ++j) acc += values[j] * cur[j];
    out[n] = acc / (static_cast<double>(S) * radius_pow);
    radius_pow *= sample_radius;
    if (n < count)
      for (int j = 0; j < S; ++j) cur[j] *= rot[j];
  }
  return out;
}

}  // namespace polylandau
