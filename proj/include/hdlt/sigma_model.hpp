#pragma once

#include <Eigen/Dense>

namespace hdlt {

/// Population covariance model for sampling and exact trace parameters.
///
/// AR1 is the stationary autoregressive structure Sigma_ij = eta^|i-j| with
/// unit marginal variances; eta = 0 is entrywise identical to Identity.
struct SigmaModel {
  enum class Kind { Identity, AR1, Dense };

  Kind kind = Kind::Identity;
  int p = 0;
  double eta = 0.0;        // AR1 only
  Eigen::MatrixXd matrix;  // Dense only

  static SigmaModel identity(int p);
  static SigmaModel ar1(int p, double eta);
  /// Validates symmetry (1e-12 relative) and positive definiteness.
  static SigmaModel dense(const Eigen::MatrixXd& sigma);

  /// Throws ArgumentError when the model is malformed.
  void validate() const;

  /// Explicit p x p covariance matrix.
  Eigen::MatrixXd materialize() const;
};

}  // namespace hdlt
