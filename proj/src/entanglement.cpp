#include "magnonics/entanglement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "magnonics/errors.hpp"

namespace magnonics {

namespace {

constexpr double kClampTol = 1e-9;

// First row/col index of each mode's quadrature block in the 6x6 ordering
// (X_m, Y_m, X_a, Y_a, X_b, Y_b).
struct Blocks {
  std::size_t first;
  std::size_t second;
};

Blocks blocks_for(ModePair pair) {
  switch (pair) {
    case ModePair::light_magnon: return {2, 0};
    case ModePair::light_microwave: return {2, 4};
    case ModePair::microwave_magnon: return {4, 0};
  }
  throw std::invalid_argument("blocks_for: bad ModePair");
}

Mat block2(const Mat& v, std::size_t r, std::size_t c) {
  Mat out(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out(i, j) = v(r + i, c + j);
  return out;
}

}  // namespace

const char* pair_name(ModePair pair) {
  switch (pair) {
    case ModePair::light_magnon: return "light_magnon";
    case ModePair::light_microwave: return "light_microwave";
    case ModePair::microwave_magnon: return "microwave_magnon";
  }
  return "?";
}

BipartiteCov reduce(const Mat& v, ModePair pair) {
  if (v.rows() != 6 || v.cols() != 6)
    throw std::invalid_argument("reduce: expected a 6x6 covariance matrix");
  const Blocks b = blocks_for(pair);
  return {block2(v, b.first, b.first), block2(v, b.second, b.second),
          block2(v, b.first, b.second), pair};
}

Mat assemble(const BipartiteCov& b) {
  Mat v(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      v(i, j) = b.v1(i, j);
      v(i + 2, j + 2) = b.v2(i, j);
      v(i, j + 2) = b.v3(i, j);
      v(j + 2, i) = b.v3(i, j);
    }
  return v;
}

EntanglementResult log_negativity(const BipartiteCov& b) {
  const double det1 = det(b.v1);
  const double det2 = det(b.v2);
  const double det3 = det(b.v3);
  const double det4 = det(assemble(b));

  const double sigma = det1 + det2 - 2.0 * det3;
  double disc = sigma * sigma - 4.0 * det4;
  if (disc < 0.0) {
    if (disc < -kClampTol)
      throw NonPhysicalStateError(
          "log_negativity: discriminant " + std::to_string(disc) +
          " below tolerance; covariance matrix violates the uncertainty principle");
    disc = 0.0;
  }

  double inner = 0.5 * (sigma - std::sqrt(disc));
  if (inner < 0.0) {
    if (inner < -kClampTol)
      throw NonPhysicalStateError(
          "log_negativity: squared symplectic eigenvalue " + std::to_string(inner) +
          " below tolerance; covariance matrix is not physical");
    inner = 0.0;
  }

  const double eta = std::sqrt(inner);
  return {std::max(0.0, -std::log(2.0 * eta)), eta};
}

PairEntanglement all_pairs(const Mat& v) {
  PairEntanglement out;
  out.light_magnon = log_negativity(reduce(v, ModePair::light_magnon));
  out.light_microwave = log_negativity(reduce(v, ModePair::light_microwave));
  out.microwave_magnon = log_negativity(reduce(v, ModePair::microwave_magnon));
  return out;
}

}  // namespace magnonics
