#include <doctest.h>

#include "oracle.hpp"
#include "skewent/scan.hpp"
#include "skewent/state_spec.hpp"
#include "skewent/states.hpp"

using namespace skewent;

namespace {

double max_abs(const Operator& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("states") {

TEST_CASE("dicke states") {
  const Ket d63 = dicke_ket(6, 3);
  int nonzero = 0;
  for (Eigen::Index i = 0; i < d63.size(); ++i)
    if (std::abs(d63(i)) > 0) {
      ++nonzero;
      CHECK(std::abs(d63(i) - 1.0 / std::sqrt(20.0)) < 1e-15);
      CHECK(__builtin_popcount(static_cast<unsigned>(i)) == 3);
    }
  CHECK(nonzero == 20);

  const Ket d21 = dicke_ket(2, 1);
  CHECK(std::abs(d21(1) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(d21(2) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(d21(0)) == 0.0);
  CHECK(std::abs(dicke_ket(4, 0)(0) - 1.0) < 1e-15);
  CHECK_THROWS(dicke_ket(3, 4));
}

TEST_CASE("ghz states") {
  const Ket g = ghz_ket(3), gp = ghz_phase_ket(3);
  CHECK(std::abs(g(0) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(g(7) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(gp(7) - Complex(0.0, -1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(g.squaredNorm() - 1.0) < 1e-15);
  CHECK_THROWS(ghz_ket(1));
}

TEST_CASE("white noise and product states") {
  const auto w = white_noise({2, 3});
  CHECK(max_abs(w.rho() - identity(6) / 6.0) < 1e-15);
  const auto p = product_state({2, 2}, "+1");
  Ket expected(4);
  expected << 0, 1.0 / std::sqrt(2.0), 0, 1.0 / std::sqrt(2.0);
  CHECK(max_abs(p.rho() - oracle::projector(expected)) < 1e-15);
  CHECK_THROWS(product_state({3}, "+"));
  CHECK_THROWS(product_state({2}, "2"));
  CHECK_THROWS(product_state({2, 2}, "0"));
}

TEST_CASE("noise families") {
  const auto fam = dicke_family(6);
  CHECK(max_abs(fam.at(0.0).rho() - identity(64) / 64.0) < 1e-15);
  CHECK(max_abs(fam.at(1.0).rho() - oracle::projector(dicke_ket(6, 3))) < 1e-14);

  // Two pure states with overlap |<G|G~>| = 1/sqrt(2): eigenvalues (1 +- 1/sqrt(2)) / 2.
  const auto two = ghz_family(6).at(0.5, 0.5);
  const auto& ev = two.eigenvalues();
  CHECK(ev(0) == doctest::Approx(0.5 * (1 + 1 / std::sqrt(2.0))).epsilon(1e-12));
  CHECK(ev(1) == doctest::Approx(0.5 * (1 - 1 / std::sqrt(2.0))).epsilon(1e-12));
  CHECK(std::abs(ev(2)) < 1e-14);
  CHECK_THROWS(ghz_family(6).at(0.7, 0.7));
}

TEST_CASE("random k-separable states") {
  RandomMixtureInfo info;
  for (int k = 2; k <= 5; ++k) {
    random_k_separable(5, Dims(5, 2), k, 4, 100 + static_cast<std::uint64_t>(k), &info);
    CHECK(info.partitions.size() == 4);
    for (const auto& p : info.partitions) CHECK(p.size() == static_cast<std::size_t>(k));
    double total = 0.0;
    for (double w : info.weights) total += w;
    CHECK(total == doctest::Approx(1.0));
  }
  random_k_separable(4, {2, 3, 2, 2}, 4, 2, 9, &info);
  for (const auto& p : info.partitions)
    for (const auto& block : p) CHECK(block.size() == 1);

  // One term over two blocks is a pure biseparable state.
  const auto pure = random_k_separable(4, Dims(4, 2), 2, 1, 17, &info);
  CHECK(pure.purity() == doctest::Approx(1.0));
  const auto& blocks = info.partitions.front();
  CHECK(partial_trace(pure, blocks[0]).purity() == doctest::Approx(1.0));

  const auto a = random_k_separable(3, {2, 3, 2}, 2, 3, 5);
  const auto b = random_k_separable(3, {2, 3, 2}, 2, 3, 5);
  CHECK(max_abs(a.rho() - b.rho()) == 0.0);
  CHECK_THROWS(random_k_separable(3, Dims(3, 2), 1, 1, 0));
  CHECK_THROWS(random_k_separable(3, Dims(3, 2), 4, 1, 0));
}

TEST_CASE("random k-producible states") {
  RandomMixtureInfo info;
  for (int k = 1; k <= 4; ++k) {
    random_k_producible(5, Dims(5, 2), k, 6, 200 + static_cast<std::uint64_t>(k), &info);
    for (const auto& p : info.partitions) {
      std::size_t covered = 0;
      for (const auto& block : p) {
        CHECK(block.size() <= static_cast<std::size_t>(k));
        covered += block.size();
      }
      CHECK(covered == 5);
    }
  }
  const auto single = random_k_producible(3, Dims(3, 2), 1, 1, 3, &info);
  for (std::size_t i = 0; i < 3; ++i) CHECK(partial_trace(single, {i}).purity() == doctest::Approx(1.0));
  CHECK_THROWS(random_k_producible(3, Dims(3, 2), 3, 1, 0));
}

TEST_CASE("state expressions") {
  const auto spec = parse_state_spec("mix( 0.8 : dicke(N=6, m=3), 0.2: white(N=6,d=2) )");
  CHECK(spec.is_mix());
  CHECK(spec.to_string() == "mix(0.8: dicke(N=6,m=3), 0.2: white(N=6,d=2))");
  CHECK(parse_state_spec(spec.to_string()).to_string() == spec.to_string());
  const auto st = evaluate(spec);
  CHECK(max_abs(st.rho() - dicke_family(6).at(0.8).rho()) < 1e-14);

  CHECK(evaluate(parse_state_spec("white(dims=2x3)")).dims() == Dims{2, 3});
  CHECK(evaluate(parse_state_spec("product(kets=01,dims=3x2)")).dims() == Dims{3, 2});
  CHECK(evaluate(parse_state_spec("kseparable(N=3,k=2,terms=2,seed=4)")).dims() == Dims{2, 2, 2});
  CHECK(evaluate(parse_state_spec("kproducible(dims=2x3x2,k=2,terms=2,seed=4)")).dims() == Dims{2, 3, 2});
  CHECK(evaluate(parse_state_spec("ghzphase(N=3)")).dim() == 8);

  CHECK_THROWS_AS(evaluate(parse_state_spec("foo(N=2)")), ParseError);
  CHECK_THROWS_AS(evaluate(parse_state_spec("dicke(N=6,N=5,m=1)")), ParseError);
  CHECK_THROWS_AS(parse_state_spec("dicke(N=6,m=3"), ParseError);
  CHECK_THROWS_AS(evaluate(parse_state_spec("dicke(N=6,m=3,x=1)")), ParseError);
  CHECK_THROWS_AS(evaluate(parse_state_spec("mix(0.5: ghz(N=2), 0.4: white(N=2,d=2))")), DomainError);
  CHECK_THROWS_AS(evaluate(parse_state_spec("mix(0.5: ghz(N=2), 0.5: white(N=3,d=2))")), DimensionError);
}

}
