#include "magnonics/smallmat.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "magnonics/errors.hpp"

namespace magnonics {

namespace {

void require_same_shape(const Mat& a, const Mat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string("Mat shape mismatch in ") + op);
}

Eigen::MatrixXd to_eigen(const Mat& a) {
  Eigen::MatrixXd out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

}  // namespace

Mat::Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c, 0.0) {}

Mat::Mat(std::size_t r, std::size_t c, std::vector<double> data)
    : rows_(r), cols_(c), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw std::invalid_argument("Mat: data size does not match dimensions");
  if (!all_finite()) throw std::invalid_argument("Mat: non-finite entry");
}

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("Mat: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  if (!all_finite()) throw std::invalid_argument("Mat: non-finite entry");
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::diagonal(const std::vector<double>& entries) {
  Mat m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  if (!m.all_finite()) throw std::invalid_argument("Mat: non-finite entry");
  return m;
}

bool Mat::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "operator+");
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "operator-");
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

Mat operator*(double s, const Mat& a) {
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("Mat shape mismatch in operator*");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Mat transpose(const Mat& a) {
  Mat out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Mat symmetrize(const Mat& a) {
  if (!a.square()) throw std::invalid_argument("symmetrize: matrix not square");
  Mat out(a.rows(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = 0.5 * (a(i, j) + a(j, i));
  return out;
}

double frobenius_norm(const Mat& a) {
  double s = 0.0;
  for (double v : a.data()) s += v * v;
  return std::sqrt(s);
}

double max_abs_entry(const Mat& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double det(const Mat& a) {
  if (!a.square()) throw std::invalid_argument("det: matrix not square");
  switch (a.rows()) {
    case 1:
      return a(0, 0);
    case 2:
      return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    case 4: {
      // Cofactor expansion along the first row, with the six 2x2 minors of
      // rows {2,3} shared between the 3x3 cofactors.
      const double m01 = a(2, 0) * a(3, 1) - a(2, 1) * a(3, 0);
      const double m02 = a(2, 0) * a(3, 2) - a(2, 2) * a(3, 0);
      const double m03 = a(2, 0) * a(3, 3) - a(2, 3) * a(3, 0);
      const double m12 = a(2, 1) * a(3, 2) - a(2, 2) * a(3, 1);
      const double m13 = a(2, 1) * a(3, 3) - a(2, 3) * a(3, 1);
      const double m23 = a(2, 2) * a(3, 3) - a(2, 3) * a(3, 2);
      const double c0 = a(1, 1) * m23 - a(1, 2) * m13 + a(1, 3) * m12;
      const double c1 = a(1, 0) * m23 - a(1, 2) * m03 + a(1, 3) * m02;
      const double c2 = a(1, 0) * m13 - a(1, 1) * m03 + a(1, 3) * m01;
      const double c3 = a(1, 0) * m12 - a(1, 1) * m02 + a(1, 2) * m01;
      return a(0, 0) * c0 - a(0, 1) * c1 + a(0, 2) * c2 - a(0, 3) * c3;
    }
    default:
      throw std::invalid_argument("det: order must be 1, 2, or 4");
  }
}

std::vector<double> eigen_real_parts(const Mat& a) {
  if (!a.square()) throw std::invalid_argument("eigen_real_parts: matrix not square");
  if (!a.all_finite()) throw std::invalid_argument("eigen_real_parts: non-finite entry");
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(a), /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw EigenSolveError("eigen_real_parts: QR iteration did not converge");
  std::vector<double> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = es.eigenvalues()[i].real();
  return out;
}

double stability_margin(const Mat& a, double scale) { return scale * max_abs_entry(a); }

Mat lyapunov_solve(const Mat& a, const Mat& d, double margin_scale, double* residual_out) {
  if (!a.square()) throw std::invalid_argument("lyapunov_solve: a not square");
  const std::size_t n = a.rows();
  if (d.rows() != n || d.cols() != n)
    throw std::invalid_argument("lyapunov_solve: d shape does not match a");
  if (!a.all_finite() || !d.all_finite())
    throw std::invalid_argument("lyapunov_solve: non-finite entry");

  const double dnorm = frobenius_norm(d);
  if (frobenius_norm(d - transpose(d)) > 1e-12 * std::max(dnorm, 1.0))
    throw std::invalid_argument("lyapunov_solve: d not symmetric");

  const Eigen::MatrixXd de = to_eigen(symmetrize(d));
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sa(de, Eigen::EigenvaluesOnly);
    if (sa.info() != Eigen::Success)
      throw EigenSolveError("lyapunov_solve: symmetric eigensolve failed");
    if (sa.eigenvalues().minCoeff() < -1e-10 * std::max(dnorm, 1.0))
      throw std::invalid_argument("lyapunov_solve: d not positive semidefinite");
  }

  const double margin = stability_margin(a, margin_scale);
  double max_re = -std::numeric_limits<double>::infinity();
  for (double re : eigen_real_parts(a)) max_re = std::max(max_re, re);
  if (!(max_re < -margin)) throw StabilityError(max_re);

  // a V + V a^T = -d column-vectorizes to (I (x) a + a (x) I) vec(V) = -vec(d).
  const Eigen::MatrixXd ae = to_eigen(a);
  Eigen::MatrixXd kron = Eigen::MatrixXd::Zero(n * n, n * n);
  for (std::size_t k = 0; k < n; ++k) {
    kron.block(k * n, k * n, n, n) += ae;
    for (std::size_t l = 0; l < n; ++l)
      kron.block(k * n, l * n, n, n).diagonal().array() += ae(k, l);
  }
  Eigen::VectorXd rhs(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) rhs[j * n + i] = -de(i, j);

  Eigen::FullPivLU<Eigen::MatrixXd> lu(kron);
  if (!lu.isInvertible()) throw SingularSolveError("lyapunov_solve: Kronecker system singular");
  Eigen::VectorXd x = lu.solve(rhs);
  x += lu.solve(rhs - kron * x);  // one step of iterative refinement

  Mat v(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) v(i, j) = x[j * n + i];
  v = symmetrize(v);
  if (!v.all_finite()) throw SingularSolveError("lyapunov_solve: non-finite solution");

  const double residual =
      frobenius_norm(a * v + v * transpose(a) + d) / (dnorm > 0.0 ? dnorm : 1.0);
  if (residual_out) *residual_out = residual;
  if (residual > 1e-10)
    throw SingularSolveError("lyapunov_solve: relative residual " + std::to_string(residual) +
                             " exceeds 1e-10");
  return v;
}

}  // namespace magnonics
