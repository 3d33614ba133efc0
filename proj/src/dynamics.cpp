#include "magnonics/dynamics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <stdexcept>

#include "magnonics/errors.hpp"

namespace magnonics {

SystemMatrices build_matrices(const DerivedParams& dp, const PhysicalParams& p) {
  const double km = p.kappa_m / kappa_ref;
  const double ka = dp.kappa_a / kappa_ref;
  const double kb = p.kappa_b / kappa_ref;
  const double dm = p.delta_m / kappa_ref;
  const double da = p.delta_a / kappa_ref;
  const double db = p.delta_b / kappa_ref;
  const double g_ma = dp.g_ma_eff / kappa_ref;  // pump-enhanced, real and positive
  const double g_mb = p.g_mb / kappa_ref;

  // Magnon-optical coupling is beam-splitter-like in (X_a, Y_a) but enters
  // both magnon quadratures with the same sign; magnon-microwave coupling
  // is the usual state-swap form.
  SystemMatrices m;
  m.a = Mat{{-km, dm, 0.0, -g_ma, 0.0, g_mb},
            {-dm, -km, -g_ma, 0.0, -g_mb, 0.0},
            {0.0, -g_ma, -ka, da, 0.0, 0.0},
            {-g_ma, 0.0, -da, -ka, 0.0, 0.0},
            {0.0, g_mb, 0.0, 0.0, -kb, db},
            {-g_mb, 0.0, 0.0, 0.0, -db, -kb}};

  const double dmm = km * (2.0 * dp.n_m + 1.0);
  const double daa = ka * (2.0 * dp.n_a + 1.0);
  const double dbb = kb * (2.0 * dp.n_b + 1.0);
  m.d = Mat::diagonal({dmm, dmm, daa, daa, dbb, dbb});
  return m;
}

StabilityReport check_stability(const SystemMatrices& m, double margin_scale) {
  const auto res = eigen_real_parts(m.a);
  const double max_re = *std::max_element(res.begin(), res.end());
  return {max_re < -stability_margin(m.a, margin_scale), max_re};
}

SteadyState steady_state(const SystemMatrices& m, double margin_scale) {
  SteadyState s;
  const auto rep = check_stability(m, margin_scale);
  s.max_real_eig = rep.max_real_eig;
  if (!rep.stable) throw StabilityError(rep.max_real_eig);
  s.v = lyapunov_solve(m.a, m.d, margin_scale, &s.residual);
  return s;
}

double uncertainty_min_eig(const Mat& v) {
  if (!v.square() || v.rows() % 2 != 0)
    throw std::invalid_argument("uncertainty_min_eig: need an even-order square matrix");
  const std::size_t n = v.rows();
  Eigen::MatrixXcd h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = std::complex<double>(v(i, j), 0.0);
  for (std::size_t k = 0; k < n; k += 2) {
    h(k, k + 1) += std::complex<double>(0.0, 0.5);
    h(k + 1, k) += std::complex<double>(0.0, -0.5);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw EigenSolveError("uncertainty_min_eig: eigensolve failed");
  return es.eigenvalues().minCoeff();
}

}  // namespace magnonics
