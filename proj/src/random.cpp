#include "skewent/random.hpp"

namespace skewent {

Ket random_ket(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Ket k(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < k.size(); ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    k(i) = Complex(re, im);
  }
  return k / k.norm();
}

QuantumState random_state(const Dims& dims, std::size_t rank, Rng& rng) {
  if (rank == 0) throw DomainError("random_state: rank must be positive");
  const std::size_t dim = total_dim(dims);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  Operator rho = Operator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  double total = 0.0;
  for (std::size_t r = 0; r < rank; ++r) {
    const double w = unit(rng);
    const Ket k = random_ket(dim, rng);
    rho += w * (k * k.adjoint());
    total += w;
  }
  return QuantumState::from_density(dims, rho / total);
}

QuantumState random_pure_state(const Dims& dims, Rng& rng) {
  return QuantumState::from_ket(dims, random_ket(total_dim(dims), rng));
}

Operator random_hermitian(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  Operator g(n, n);
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    g(i) = Complex(re, im);
  }
  return 0.5 * (g + g.adjoint());
}

Eigen::MatrixXd random_orthogonal(std::size_t n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd a(m, m);
  for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < m; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  return q;
}

}  // namespace skewent
