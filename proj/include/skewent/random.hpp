#pragma once

#include <random>

#include "skewent/matrix.hpp"

namespace skewent {

using Rng = std::mt19937_64;

/// Normalised vector of i.i.d. standard complex Gaussians (Haar-distributed pure state).
Ket random_ket(std::size_t dim, Rng& rng);

/// Random density matrix of the given rank: sum of `rank` Haar kets with random weights.
QuantumState random_state(const Dims& dims, std::size_t rank, Rng& rng);

QuantumState random_pure_state(const Dims& dims, Rng& rng);

/// Hermitian matrix (G + G^dagger) / 2 with Gaussian entries.
Operator random_hermitian(std::size_t dim, Rng& rng);

/// Real orthogonal matrix from the QR factorisation of a Gaussian matrix, sign-fixed.
Eigen::MatrixXd random_orthogonal(std::size_t n, Rng& rng);

}  // namespace skewent
