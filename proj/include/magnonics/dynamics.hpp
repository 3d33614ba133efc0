#pragma once

#include "magnonics/params.hpp"
#include "magnonics/smallmat.hpp"

namespace magnonics {

// All drift/diffusion entries are expressed in units of this reference rate
// so they stay O(1)-O(40) across every supported operating point.
inline constexpr double kappa_ref = two_pi * 1.0e6;

// Drift matrix a and diffusion matrix d of the linearized three-mode
// quadrature dynamics, in kappa_ref units. Quadrature ordering:
// (X_m, Y_m, X_a, Y_a, X_b, Y_b) = (magnon, optical, microwave).
struct SystemMatrices {
  Mat a;  // 6x6 drift
  Mat d;  // 6x6 diagonal diffusion
};

SystemMatrices build_matrices(const DerivedParams& dp, const PhysicalParams& p);

struct StabilityReport {
  bool stable;
  double max_real_eig;  // kappa_ref units
};

// Stable iff every drift eigenvalue real part lies strictly left of
// -stability_margin(a, margin_scale).
StabilityReport check_stability(const SystemMatrices& m, double margin_scale = 1e-9);

struct SteadyState {
  Mat v;                // 6x6 stationary covariance
  double max_real_eig;  // kappa_ref units
  double residual;      // relative Lyapunov residual of v
};

// Stationary covariance from a V + V a^T = -d. Throws StabilityError
// (carrying max_real_eig) when the drift is not stable; the returned v is
// symmetric with relative residual <= 1e-10.
SteadyState steady_state(const SystemMatrices& m, double margin_scale = 1e-9);

// Smallest eigenvalue of the Hermitian matrix v + (i/2) Omega, where Omega
// is the symplectic form of n = rows/2 modes. Non-negative (up to roundoff)
// exactly when v satisfies the uncertainty principle.
double uncertainty_min_eig(const Mat& v);

}  // namespace magnonics
