#pragma once

#include "magnonics/smallmat.hpp"

namespace magnonics {

// Bipartitions of the three-mode state. "light" is the optical mode.
enum class ModePair { light_magnon, light_microwave, microwave_magnon };

const char* pair_name(ModePair pair);

// 2x2 blocks of a two-mode covariance matrix [[v1, v3], [v3^T, v2]]; the
// first mode of the pair name owns v1.
struct BipartiteCov {
  Mat v1;
  Mat v2;
  Mat v3;
  ModePair pair;
};

// Extracts the pair's blocks from the full 6x6 covariance matrix.
BipartiteCov reduce(const Mat& v, ModePair pair);

// Reassembled 4x4 two-mode covariance matrix.
Mat assemble(const BipartiteCov& b);

struct EntanglementResult {
  double e_n;        // logarithmic negativity, >= 0
  double eta_minus;  // smaller partial-transpose symplectic eigenvalue
};

// Logarithmic negativity from the closed-form symplectic eigenvalue:
// sigma = det v1 + det v2 - 2 det v3,
// eta- = sqrt((sigma - sqrt(sigma^2 - 4 det V)) / 2),
// e_n = max(0, -ln 2 eta-).
// A discriminant in [-1e-9, 0) is clamped to 0; anything lower, or a
// negative inner expression beyond the same tolerance, throws
// NonPhysicalStateError.
EntanglementResult log_negativity(const BipartiteCov& b);

struct PairEntanglement {
  EntanglementResult light_magnon;
  EntanglementResult light_microwave;
  EntanglementResult microwave_magnon;
};

// All three bipartitions of the full covariance matrix.
PairEntanglement all_pairs(const Mat& v);

}  // namespace magnonics
