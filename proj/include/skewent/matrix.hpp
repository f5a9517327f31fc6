#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace skewent {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;
using Dims = std::vector<std::size_t>;
using Sites = std::vector<std::size_t>;

/// Tolerance on max |A - A^dagger| for anything treated as an observable or state.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
/// Eigenvalues in [-kClampTol, 0) are set to zero; anything below fails validation.
inline constexpr double kClampTol = 1e-10;
/// Eigenvalues in [0, kZeroEigenTol] are solver round-off and are also set to zero.
inline constexpr double kZeroEigenTol = 1e-14;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shapes or dimensions that do not fit together.
struct DimensionError : Error {
  using Error::Error;
};

/// Argument outside the admissible domain (k out of range, negative input, ...).
struct DomainError : Error {
  using Error::Error;
};

/// A numerical object failed validation (non-Hermitian, trace != 1, not PSD).
struct ValidationError : Error {
  using Error::Error;
};

std::size_t total_dim(std::span<const std::size_t> dims);

double hermiticity_defect(const Operator& a);
void require_hermitian(const Operator& a, const char* what);

Operator kron(const Operator& a, const Operator& b);
Ket kron(const Ket& a, const Ket& b);

/// I ⊗ ... ⊗ op ⊗ ... ⊗ I with op on position `site` of `dims`.
Operator embed(const Operator& op, std::size_t site, std::span<const std::size_t> dims);

struct Spectrum {
  Eigen::VectorXd values;   // descending
  Eigen::MatrixXcd vectors; // column l pairs with values[l]
};

Spectrum eigendecompose(const Operator& a);

struct EigenRange {
  double min;
  double max;
};

EigenRange extreme_eigenvalues(const Operator& a);

/// Density matrix with per-site dimensions and a cached spectral decomposition.
///
/// Construction validates the matrix: Hermitian within kHermitianTol, unit trace
/// within kTraceTol and no eigenvalue below -kClampTol. Small negative
/// eigenvalues are clamped to zero without renormalisation. Instances are
/// immutable after construction.
class QuantumState {
 public:
  static QuantumState from_density(Dims dims, Operator rho);
  static QuantumState from_ket(Dims dims, const Ket& psi);

  const Dims& dims() const noexcept { return dims_; }
  std::size_t num_sites() const noexcept { return dims_.size(); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(rho_.rows()); }
  std::size_t max_site_dim() const noexcept;

  const Operator& rho() const noexcept { return rho_; }
  const Eigen::VectorXd& eigenvalues() const noexcept { return spectrum_.values; }
  const Eigen::MatrixXcd& eigenvectors() const noexcept { return spectrum_.vectors; }

  double purity() const;

 private:
  QuantumState(Dims dims, Operator rho, Spectrum spectrum)
      : dims_(std::move(dims)), rho_(std::move(rho)), spectrum_(std::move(spectrum)) {}

  Dims dims_;
  Operator rho_;
  Spectrum spectrum_;
};

/// Reduced state on the sites in `keep` (kept in ascending site order).
QuantumState partial_trace(const QuantumState& state, const Sites& keep);

/// Same reduction on a bare operator; returns the reduced matrix.
Operator partial_trace(const Operator& rho, std::span<const std::size_t> dims, const Sites& keep);

Operator identity(std::size_t d);

/// Convex combination; weights must be positive and the operators equal-sized.
Operator convex_sum(std::span<const double> weights, std::span<const Operator> ops);

}  // namespace skewent
