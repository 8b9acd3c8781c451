#pragma once

#include <Eigen/Dense>

namespace vibronic {

/// Result of a dense Hermitian eigendecomposition: M = V diag(w) V^dagger,
/// eigenvalues ascending, columns of `vectors` orthonormal.
struct Eigh {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

/// Diagonalize a Hermitian matrix (LAPACK zheevd). Only the lower triangle
/// is referenced. Throws std::runtime_error if the factorization fails.
Eigh eigh(const Eigen::MatrixXcd& m);

}  // namespace vibronic
