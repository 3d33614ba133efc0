#include "magnonics/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include "magnonics/errors.hpp"

namespace magnonics {

IntegrationSpec default_integration_spec(double max_real_eig) {
  if (!(max_real_eig < 0.0))
    throw std::invalid_argument("default_integration_spec: need a negative max_real_eig");
  return {1e-3, 50.0 / std::abs(max_real_eig), 1e-8};
}

namespace {

// Right-hand side of the covariance flow.
Mat flow(const Mat& a, const Mat& at, const Mat& d, const Mat& v) {
  return a * v + v * at + d;
}

}  // namespace

Mat integrate_covariance(const SystemMatrices& m, const IntegrationSpec& spec, const Mat& v0,
                         const StepObserver& observer) {
  if (!m.a.square()) throw std::invalid_argument("integrate_covariance: drift not square");
  if (!(spec.dt > 0.0) || !(spec.t_max > 0.0) || !(spec.tol > 0.0))
    throw std::invalid_argument("integrate_covariance: spec fields must be positive");
  const std::size_t n = m.a.rows();

  Mat v = v0.rows() == 0 ? 0.5 * Mat::identity(n) : v0;
  if (v.rows() != n || v.cols() != n)
    throw std::invalid_argument("integrate_covariance: v0 shape does not match drift");

  const Mat at = transpose(m.a);
  double t = 0.0;
  while (true) {
    const Mat k1 = flow(m.a, at, m.d, v);
    const double res = frobenius_norm(k1);
    if (!std::isfinite(res))
      throw NoConvergenceError("integrate_covariance: state diverged at t = " +
                               std::to_string(t));
    if (observer) observer(t, v, res);
    if (res < spec.tol) return symmetrize(v);
    if (t >= spec.t_max)
      throw NoConvergenceError("integrate_covariance: residual " + std::to_string(res) +
                               " still above tolerance at t_max");
    const Mat k2 = flow(m.a, at, m.d, v + (0.5 * spec.dt) * k1);
    const Mat k3 = flow(m.a, at, m.d, v + (0.5 * spec.dt) * k2);
    const Mat k4 = flow(m.a, at, m.d, v + spec.dt * k3);
    v = v + (spec.dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += spec.dt;
  }
}

double brute_force_eta(const BipartiteCov& b) {
  const Mat v = assemble(b);

  // Partial transpose of the second mode flips the sign of its Y row and
  // column: V-tilde = P V P with P = diag(1, 1, 1, -1).
  Eigen::Matrix4d vt;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double sign = ((i == 3) != (j == 3)) ? -1.0 : 1.0;
      vt(i, j) = sign * v(i, j);
    }

  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = 1.0;
  omega(1, 0) = -1.0;
  omega(2, 3) = 1.0;
  omega(3, 2) = -1.0;

  // The eigenvalues of i Omega V-tilde come in pairs +-eta; the smallest
  // modulus is eta-.
  Eigen::EigenSolver<Eigen::Matrix4d> es(omega * vt, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw EigenSolveError("brute_force_eta: eigensolve failed");
  double eta = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) eta = std::min(eta, std::abs(es.eigenvalues()[i]));
  return eta;
}

}  // namespace magnonics
