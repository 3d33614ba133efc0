#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace magnonics {

// Dense real matrix, row-major storage. Sized for the small fixed systems
// this library works with (6x6 drift/covariance, 4x4 reductions), not a
// general linear-algebra type.
class Mat {
public:
  Mat() = default;
  // Zero-filled r x c matrix.
  Mat(std::size_t r, std::size_t c);
  // Takes ownership of row-major data; throws std::invalid_argument on a
  // size mismatch or any non-finite entry.
  Mat(std::size_t r, std::size_t c, std::vector<double> data);
  // Brace construction from rows: Mat{{1, 2}, {3, 4}}.
  Mat(std::initializer_list<std::initializer_list<double>> rows);

  static Mat identity(std::size_t n);
  static Mat diagonal(const std::vector<double>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_ && rows_ > 0; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }
  bool all_finite() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(double s, const Mat& a);
Mat operator*(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Mat symmetrize(const Mat& a);  // (a + a^T) / 2

double frobenius_norm(const Mat& a);
double max_abs_entry(const Mat& a);

// Determinant, restricted to the orders the entanglement pipeline needs:
// n in {1, 2, 4}. Cofactor expansion, exact operation count.
double det(const Mat& a);

// Real parts of all eigenvalues of a square matrix, unsorted; a complex
// conjugate pair contributes its shared real part twice. Throws
// EigenSolveError if the QR iteration fails, std::invalid_argument on a
// non-square or non-finite input.
std::vector<double> eigen_real_parts(const Mat& a);

// Instability cutoff used throughout: scale times the largest absolute
// entry of a. A matrix counts as stable only when every eigenvalue real
// part lies strictly left of -stability_margin(a).
double stability_margin(const Mat& a, double scale = 1e-9);

// Solve a V + V a^T = -d for symmetric V via the n^2 x n^2 Kronecker
// system. Requires all eigenvalues of a left of -stability_margin(a,
// margin_scale) (else StabilityError) and d symmetric positive
// semidefinite. The result is symmetrized and carries a relative residual
// ||aV + Va^T + d||_F / ||d||_F <= 1e-10 (else SingularSolveError); the
// residual is written to *residual_out when given.
Mat lyapunov_solve(const Mat& a, const Mat& d, double margin_scale = 1e-9,
                   double* residual_out = nullptr);

}  // namespace magnonics
