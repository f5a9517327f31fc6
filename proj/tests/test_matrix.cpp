#include <doctest.h>

#include "oracle.hpp"
#include "skewent/matrix.hpp"
#include "skewent/observables.hpp"
#include "skewent/random.hpp"

using namespace skewent;

namespace {

double max_abs(const Operator& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

Ket basis_ket(std::size_t d, std::size_t i) {
  Ket k = Ket::Zero(static_cast<Eigen::Index>(d));
  k(static_cast<Eigen::Index>(i)) = 1.0;
  return k;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("kron small cases") {
  CHECK(max_abs(kron(identity(2), identity(2)) - identity(4)) == 0.0);

  Operator expected = Operator::Zero(4, 4);
  expected.diagonal() << 1, 1, -1, -1;
  CHECK(max_abs(kron(pauli_z(), identity(2)) - expected) == 0.0);

  const Ket k00 = basis_ket(4, 0);
  const Ket k11 = basis_ket(4, 3);
  CHECK((kron(pauli_x(), pauli_x()) * k00 - k11).norm() == 0.0);
}

TEST_CASE("kron agrees with the index-loop oracle") {
  Rng rng(3);
  for (int n = 0; n < 10; ++n) {
    const Operator a = random_hermitian(2 + n % 3, rng);
    const Operator b = random_hermitian(1 + n % 4, rng);
    CHECK(max_abs(kron(a, b) - oracle::kron(a, b)) < 1e-14);
  }
}

TEST_CASE("embed") {
  const Dims qubits{2, 2};
  CHECK(max_abs(embed(pauli_z(), 1, qubits) - kron(identity(2), pauli_z())) == 0.0);
  CHECK(max_abs(embed(identity(3), 1, Dims{2, 3, 2}) - identity(12)) == 0.0);
  CHECK((embed(pauli_x(), 0, qubits) * basis_ket(4, 0) - basis_ket(4, 2)).norm() == 0.0);
  CHECK_THROWS_AS(embed(pauli_x(), 2, qubits), DimensionError);
  CHECK_THROWS_AS(embed(pauli_x(), 0, Dims{3, 2}), DimensionError);
}

TEST_CASE("partial trace examples") {
  const auto zero_zero = QuantumState::from_ket({2, 2}, basis_ket(4, 0));
  Operator p0 = Operator::Zero(2, 2);
  p0(0, 0) = 1.0;
  CHECK(max_abs(partial_trace(zero_zero, {0}).rho() - p0) < 1e-15);

  Ket bell = (basis_ket(4, 0) + basis_ket(4, 3)) / std::sqrt(2.0);
  const auto ghz2 = QuantumState::from_ket({2, 2}, bell);
  CHECK(max_abs(partial_trace(ghz2, {0}).rho() - identity(2) / 2.0) < 1e-15);

  Rng rng(5);
  const auto a = random_state({3}, 2, rng);
  const auto b = random_state({2}, 2, rng);
  const auto ab = QuantumState::from_density({3, 2}, kron(a.rho(), b.rho()));
  CHECK(max_abs(partial_trace(ab, {0}).rho() - a.rho()) < 1e-14);
  CHECK(max_abs(partial_trace(ab, {1}).rho() - b.rho()) < 1e-14);
}

TEST_CASE("partial trace agrees with the index-sum oracle") {
  Rng rng(7);
  const Dims dims{2, 3, 2};
  for (const Sites& keep : {Sites{0}, Sites{1}, Sites{2}, Sites{0, 2}, Sites{1, 2}, Sites{0, 1, 2}}) {
    const auto s = random_state(dims, 3, rng);
    CHECK(max_abs(partial_trace(s.rho(), dims, keep) - oracle::ptrace(s.rho(), dims, keep)) < 1e-14);
  }
  CHECK_THROWS_AS(partial_trace(random_state(dims, 1, rng), Sites{3}), DimensionError);
}

TEST_CASE("eigendecompose examples") {
  auto s = eigendecompose(pauli_z());
  CHECK(s.values(0) == doctest::Approx(1.0));
  CHECK(s.values(1) == doctest::Approx(-1.0));

  s = eigendecompose(pauli_x());
  CHECK(s.values(0) == doctest::Approx(1.0));
  const Ket plus = (basis_ket(2, 0) + basis_ket(2, 1)) / std::sqrt(2.0);
  CHECK(std::abs(s.vectors.col(0).dot(plus)) == doctest::Approx(1.0));

  Operator rho = Operator::Zero(2, 2);
  rho.diagonal() << 0.1, 0.9;
  s = eigendecompose(rho);
  CHECK(s.values(0) == doctest::Approx(0.9));
  CHECK(s.values(1) == doctest::Approx(0.1));
}

TEST_CASE("extreme eigenvalues") {
  auto r = extreme_eigenvalues(pauli_z());
  CHECK(r.min == doctest::Approx(-1.0));
  CHECK(r.max == doctest::Approx(1.0));
  // 2x2 closed form: sigma_x + sigma_y has eigenvalues +-sqrt(1 + 1).
  r = extreme_eigenvalues(pauli_x() + pauli_y());
  CHECK(r.min == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.max == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  r = extreme_eigenvalues(Operator::Zero(3, 3));
  CHECK(r.min == 0.0);
  CHECK(r.max == 0.0);
}

TEST_CASE("state validation") {
  Operator rho = identity(2) / 2.0;
  CHECK_NOTHROW(QuantumState::from_density({2}, rho));

  Operator bad_trace = identity(2);
  CHECK_THROWS_AS(QuantumState::from_density({2}, bad_trace), ValidationError);

  Operator non_herm = identity(2) / 2.0;
  non_herm(0, 1) = 0.1;
  CHECK_THROWS_AS(QuantumState::from_density({2}, non_herm), ValidationError);

  Operator negative = Operator::Zero(2, 2);
  negative.diagonal() << 1.2, -0.2;
  CHECK_THROWS_AS(QuantumState::from_density({2}, negative), ValidationError);

  CHECK_THROWS_AS(QuantumState::from_density({2, 2}, rho), DimensionError);
}

TEST_CASE("small negative eigenvalues are clamped without renormalisation") {
  Operator rho = Operator::Zero(2, 2);
  rho.diagonal() << 1.0 + 5e-11, -5e-11;
  const auto s = QuantumState::from_density({2}, rho);
  CHECK(s.eigenvalues().minCoeff() == 0.0);
  CHECK(s.eigenvalues()(0) == doctest::Approx(1.0 + 5e-11).epsilon(1e-15));
}

TEST_CASE("validated states keep trace, positivity and orthonormal eigenvectors") {
  Rng rng(11);
  for (int n = 0; n < 20; ++n) {
    const Dims dims = n % 2 ? Dims{2, 3} : Dims{2, 2, 2};
    const auto s = random_state(dims, 1 + static_cast<std::size_t>(n % 5), rng);
    CHECK(std::abs(s.rho().trace().real() - 1.0) < 1e-10);
    CHECK(s.eigenvalues().minCoeff() >= 0.0);
    CHECK(std::abs(s.eigenvalues().sum() - 1.0) < 1e-9);
    const Operator gram = s.eigenvectors().adjoint() * s.eigenvectors();
    CHECK(max_abs(gram - identity(s.dim())) < 1e-12);
  }
}

TEST_CASE("convex sum") {
  const std::vector<double> w{0.25, 0.75};
  const std::vector<Operator> ops{identity(2), pauli_z()};
  Operator expected = Operator::Zero(2, 2);
  expected.diagonal() << 1.0, -0.5;
  CHECK(max_abs(convex_sum(w, ops) - expected) < 1e-15);
  const std::vector<double> bad{-0.5, 1.5};
  CHECK_THROWS(convex_sum(bad, ops));
}

}
