#pragma once

#include <functional>

#include "magnonics/dynamics.hpp"
#include "magnonics/entanglement.hpp"
#include "magnonics/smallmat.hpp"

namespace magnonics {

// Validation-only routes that reach the same physics through independent
// numerics: a fixed-step time integration of the covariance flow, and the
// symplectic spectrum computed from an explicit eigendecomposition. Nothing
// in the production pipeline calls these.

struct IntegrationSpec {
  double dt;     // RK4 step, kappa_ref^-1 units
  double t_max;  // integration horizon
  double tol;    // stationarity threshold on ||a v + v a^T + d||_F
};

// dt = 1e-3, t_max = 50 / |max_real_eig|, tol = 1e-8.
IntegrationSpec default_integration_spec(double max_real_eig);

// Called after every accepted step with the current time, state, and
// Frobenius norm of the flow's right-hand side.
using StepObserver = std::function<void(double t, const Mat& v, double residual)>;

// Integrates dV/dt = a V + V a^T + d from v0 (vacuum, 0.5 I, when v0 is
// empty) with classic fixed-step RK4 until the right-hand side drops below
// spec.tol. Throws NoConvergenceError if t_max arrives first. The returned
// matrix is symmetrized.
Mat integrate_covariance(const SystemMatrices& m, const IntegrationSpec& spec,
                         const Mat& v0 = {}, const StepObserver& observer = {});

// Smaller symplectic eigenvalue of the partially transposed two-mode
// covariance matrix, via the spectrum of i Omega V-tilde: no closed-form
// determinant identities involved.
double brute_force_eta(const BipartiteCov& b);

}  // namespace magnonics
