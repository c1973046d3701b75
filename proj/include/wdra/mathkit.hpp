#pragma once

// Scalar math helpers shared by the model code and the autodiff ops.
// Everything here is branch-stable: saturating inputs produce saturated
// outputs, never NaN.

#include <cmath>
#include <limits>

namespace wdra {

inline constexpr double kInvSqrt2Pi = 0.3989422804014326779;
inline constexpr double kLogSqrt2Pi = 0.9189385332046727418;

inline double logistic(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// d/dx logistic(x), written in terms of the output value.
inline double logistic_grad_from_value(double y) { return y * (1.0 - y); }

// log(1 + e^x) without overflow on either side.
inline double softplus(double x) {
  return std::fmax(x, 0.0) + std::log1p(std::exp(-std::fabs(x)));
}

inline double relu(double x) { return x > 0.0 ? x : 0.0; }

inline double normal_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

inline double log_normal_pdf(double z) { return -0.5 * z * z - kLogSqrt2Pi; }

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z * M_SQRT1_2); }

// log Phi(z). erfc carries us to z ~ -37; below that an asymptotic
// expansion of the Mills ratio takes over so e^{a}*Phi(b) products can be
// assembled in log space without hitting 0 * inf.
inline double log_normal_cdf(double z) {
  if (z > -37.0) {
    return std::log(0.5 * std::erfc(-z * M_SQRT1_2));
  }
  const double z2 = z * z;
  const double series = 1.0 - 1.0 / z2 + 3.0 / (z2 * z2) - 15.0 / (z2 * z2 * z2);
  return -0.5 * z2 - std::log(-z) - kLogSqrt2Pi + std::log(series);
}

// phi(z)/Phi(z), evaluated through logs so both tails stay finite.
inline double normal_hazard(double z) {
  return std::exp(log_normal_pdf(z) - log_normal_cdf(z));
}

// log(e^a + e^b); -inf inputs behave as exact zeros.
inline double logaddexp(double a, double b) {
  const double hi = std::fmax(a, b);
  if (!std::isfinite(hi)) return hi;  // both -inf (or an inf/nan passthrough)
  return hi + std::log1p(std::exp(std::fmin(a, b) - hi));
}

// CRRA utility (x^{1-rho} - 1)/(1-rho) with the log branch at |rho-1| < 1e-6.
// expm1 keeps the power branch accurate arbitrarily close to the threshold.
inline constexpr double kCrraLogBranchWidth = 1e-6;

inline double crra_u(double x, double rho) {
  const double k = 1.0 - rho;
  const double lx = std::log(x);
  if (std::fabs(k) < kCrraLogBranchWidth) return lx;
  return std::expm1(k * lx) / k;
}

// du/dx = x^{-rho} on both branches.
inline double crra_u_dx(double x, double rho) { return std::exp(-rho * std::log(x)); }

// du/drho; series expansion near the log branch where the closed form cancels.
inline double crra_u_drho(double x, double rho) {
  const double k = 1.0 - rho;
  const double lx = std::log(x);
  if (std::fabs(k) < 1e-4) {
    const double l2 = lx * lx;
    return -(0.5 * l2 + k * l2 * lx / 3.0 + k * k * l2 * l2 / 8.0);
  }
  const double kl = k * lx;
  return -(lx * std::exp(kl) * k - std::expm1(kl)) / (k * k);
}

}  // namespace wdra
