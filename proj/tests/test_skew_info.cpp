#include <doctest.h>

#include <limits>

#include "oracle.hpp"
#include "skewent/observables.hpp"
#include "skewent/random.hpp"
#include "skewent/skew_info.hpp"

using namespace skewent;

namespace {

const OrderParam kGrid[] = {OrderParam::finite(0.0),  OrderParam::finite(-0.5), OrderParam::finite(-1.0),
                            OrderParam::finite(-2.0), OrderParam::finite(-8.0), OrderParam::neg_infinity()};

QuantumState diag_state(double a, double b) {
  Operator rho = Operator::Zero(2, 2);
  rho.diagonal() << a, b;
  return QuantumState::from_density({2}, rho);
}

}  // namespace

TEST_SUITE("skew_info") {

TEST_CASE("order parameter parsing") {
  CHECK(OrderParam::parse("-inf").is_neg_infinity());
  CHECK(OrderParam::parse("-Infinity").is_neg_infinity());
  CHECK(OrderParam::parse("-0.5").value() == -0.5);
  CHECK(OrderParam::parse("0").value() == 0.0);
  CHECK_THROWS(OrderParam::parse("0.5"));
  CHECK_THROWS(OrderParam::parse("abc"));
  CHECK_THROWS(OrderParam::finite(std::numeric_limits<double>::quiet_NaN()));
  CHECK(OrderParam::parse(OrderParam::finite(-2.5).to_string()) == OrderParam::finite(-2.5));
}

TEST_CASE("power mean") {
  CHECK(power_mean(OrderParam::finite(0.0), 0.5, 0.5) == doctest::Approx(0.5));
  CHECK(power_mean(OrderParam::neg_infinity(), 0.2, 0.7) == 0.2);
  for (const auto s : kGrid) {
    CHECK(power_mean(s, 0.0, 0.9) == 0.0);
    CHECK(power_mean(s, 0.9, 0.0) == 0.0);
  }
  CHECK(power_mean(OrderParam::finite(-1.0), 0.2, 0.6) == doctest::Approx(0.3));
  CHECK(power_mean(OrderParam::finite(0.0), 0.2, 0.8) == doctest::Approx(0.4));
  CHECK(power_mean(OrderParam::finite(-2.0), 0.3, 0.3) == doctest::Approx(0.3));
}

TEST_CASE("power mean is symmetric and increasing in s") {
  const double a = 0.13, b = 0.61;
  double prev = -1.0;
  for (auto it = std::rbegin(kGrid); it != std::rend(kGrid); ++it) {
    const double f = power_mean(*it, a, b);
    CHECK(f == doctest::Approx(power_mean(*it, b, a)).epsilon(1e-15));
    CHECK(f >= prev);
    CHECK(f >= std::min(a, b));
    CHECK(f <= std::sqrt(a * b) + 1e-15);
    prev = f;
  }
  // Extreme ratios stay finite.
  CHECK(power_mean(OrderParam::finite(-8.0), 1e-12, 1.0) == doctest::Approx(1e-12 * std::pow(2.0, 1.0 / 8.0)));
}

TEST_CASE("skew information examples") {
  Ket plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const auto p = QuantumState::from_ket({2}, plus);
  const auto mixed = QuantumState::from_density({2}, identity(2) / 2.0);
  for (const auto s : kGrid) {
    CHECK(skew_information(p, pauli_z(), s) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(skew_information(mixed, pauli_z(), s) == doctest::Approx(0.0));
  }
  const auto d = diag_state(0.9, 0.1);
  CHECK(skew_information(d, pauli_x(), OrderParam::finite(0.0)) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(oracle::wigner_yanase(d.rho(), pauli_x()) == doctest::Approx(0.4).epsilon(1e-12));
  // Harmonic mean: 1 - 2 * 2(0.09)/1 = 0.64; min: 1 - 2 * 0.1 = 0.8.
  CHECK(skew_information(d, pauli_x(), OrderParam::finite(-1.0)) == doctest::Approx(0.64).epsilon(1e-12));
  CHECK(skew_information(d, pauli_x(), OrderParam::neg_infinity()) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("variance examples") {
  Ket zero = Ket::Zero(2), plus(2);
  zero(0) = 1.0;
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(variance(QuantumState::from_ket({2}, zero), pauli_z()) == doctest::Approx(0.0));
  CHECK(variance(QuantumState::from_ket({2}, plus), pauli_z()) == doctest::Approx(1.0));
  CHECK(variance(QuantumState::from_density({2}, identity(2) / 2.0), pauli_z()) == doctest::Approx(1.0));
}

TEST_CASE("s = 0 matches the Wigner-Yanase matrix form") {
  Rng rng(21);
  for (int n = 0; n < 30; ++n) {
    const Dims dims = n % 3 == 0 ? Dims{3} : Dims{2, 2};
    // Full rank: the matrix square root of a rank-deficient state carries sqrt(round-off) terms.
    const auto st = random_state(dims, 6 + static_cast<std::size_t>(n % 4), rng);
    const Operator x = random_hermitian(st.dim(), rng);
    CHECK(skew_information(st, x, OrderParam::finite(0.0)) ==
          doctest::Approx(oracle::wigner_yanase(st.rho(), x)).epsilon(1e-10));
  }
}

TEST_CASE("pure states reproduce the variance for every s") {
  Rng rng(22);
  for (int n = 0; n < 20; ++n) {
    const auto st = random_pure_state({2, 3}, rng);
    const Operator x = random_hermitian(6, rng);
    const double v = oracle::variance(st.rho(), x);
    for (const auto s : kGrid) CHECK(std::abs(skew_information(st, x, s) - v) < 1e-9);
  }
}

TEST_CASE("summed skew information equals the sum of the terms") {
  Rng rng(23);
  const auto st = random_state({2, 2}, 3, rng);
  std::vector<Operator> xs;
  for (int i = 0; i < 4; ++i) xs.push_back(random_hermitian(4, rng));
  for (const auto s : kGrid) {
    double sum = 0.0;
    for (const auto& x : xs) sum += skew_information(st, x, s);
    CHECK(skew_information_sum(st, xs, s) == doctest::Approx(sum).epsilon(1e-13));
  }
  CHECK_THROWS_AS(skew_information(st, random_hermitian(3, rng), OrderParam::finite(0.0)), DimensionError);
}

TEST_CASE("monotone in s and bounded by the variance") {
  Rng rng(24);
  for (int n = 0; n < 30; ++n) {
    const auto st = random_state({3}, 2 + static_cast<std::size_t>(n % 2), rng);
    const Operator x = random_hermitian(3, rng);
    double prev = 0.0;
    for (const auto s : kGrid) {
      const double v = skew_information(st, x, s);
      CHECK(v >= prev - 1e-10);
      prev = v;
    }
    CHECK(prev <= variance(st, x) + 1e-10);
  }
}

TEST_CASE("convexity holds for s in [-1, 0] and fails below") {
  Rng rng(25);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  double worst_convex = -1.0, worst_below = -1.0;
  for (int n = 0; n < 100; ++n) {
    const auto a = random_state({2, 2}, 1 + static_cast<std::size_t>(n % 4), rng);
    const auto b = random_state({2, 2}, 1 + static_cast<std::size_t>((n + 1) % 4), rng);
    const double p = unit(rng);
    const auto m = QuantumState::from_density({2, 2}, p * a.rho() + (1 - p) * b.rho());
    const Operator x = random_hermitian(4, rng);
    for (const auto s : kGrid) {
      const double gap = skew_information(m, x, s) - p * skew_information(a, x, s) - (1 - p) * skew_information(b, x, s);
      const bool convex_range = !s.is_neg_infinity() && s.value() >= -1.0;
      (convex_range ? worst_convex : worst_below) = std::max(convex_range ? worst_convex : worst_below, gap);
    }
  }
  CHECK(worst_convex <= 1e-9);
  CHECK(worst_below > 1e-3);
}

}
