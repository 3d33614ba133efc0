#pragma once

#include <stdexcept>
#include <string>

namespace magnonics {

// Drift matrix has an eigenvalue at or right of the stability margin; no
// stationary state exists. Carries the offending max real part.
class StabilityError : public std::runtime_error {
public:
  explicit StabilityError(double max_real_eig)
      : std::runtime_error("system unstable: max eigenvalue real part " +
                           std::to_string(max_real_eig) + " not below stability margin"),
        max_real_eig_(max_real_eig) {}
  double max_real_eig() const { return max_real_eig_; }

private:
  double max_real_eig_;
};

// Linear system behind a solve is numerically singular, or the solution
// failed its residual contract.
class SingularSolveError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Eigenvalue iteration failed to converge.
class EigenSolveError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Covariance matrix violates the uncertainty principle beyond tolerance, so
// the negativity formula has no real symplectic spectrum.
class NonPhysicalStateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Time integration hit t_max before meeting its stationarity tolerance.
class NoConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Optimization over a sweep grid found no stable candidate point.
class AllUnstableError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad config file or override; carries the offending key when known.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what, std::string key = {})
      : std::runtime_error(key.empty() ? what : "key '" + key + "': " + what),
        key_(std::move(key)) {}
  const std::string& key() const { return key_; }

private:
  std::string key_;
};

}  // namespace magnonics
