#include "skewent/selftest.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <sstream>

#include "skewent/criteria.hpp"
#include "skewent/format.hpp"
#include "skewent/random.hpp"
#include "skewent/scan.hpp"
#include "skewent/states.hpp"

namespace skewent {

namespace {

// Order grid used by every s-dependent check, from largest to smallest s.
std::array<OrderParam, 6> order_grid() {
  return {OrderParam::finite(0.0),  OrderParam::finite(-0.5), OrderParam::finite(-1.0),
          OrderParam::finite(-2.0), OrderParam::finite(-8.0), OrderParam::neg_infinity()};
}

// Grid points with s >= -1 and those below.
std::vector<OrderParam> order_range(bool convex_range) {
  std::vector<OrderParam> out;
  for (auto s : order_grid())
    if ((!s.is_neg_infinity() && s.value() >= -1.0) == convex_range) out.push_back(s);
  return out;
}

OrderParam pick_order(const std::vector<OrderParam>& grid, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  return grid[pick(rng)];
}

OrderParam random_order(Rng& rng) {
  const auto grid = order_grid();
  return pick_order({grid.begin(), grid.end()}, rng);
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Dims small_dims(Rng& rng) {
  static const std::array<Dims, 6> choices = {Dims{2}, Dims{3}, Dims{4}, Dims{2, 2}, Dims{2, 3}, Dims{3, 2}};
  return choices[uniform(rng, 0, choices.size() - 1)];
}

// Records one measured excess over the allowed value.
struct Tracker {
  CheckResult& result;
  void observe(double excess, const std::string& where) {
    ++result.instances;
    if (excess > result.worst) result.worst = excess;
    if (excess > result.tol && result.passed) {
      result.passed = false;
      result.detail = where + " exceeds tolerance by " + format_sig(excess);
    }
  }
};

CheckResult start(const std::string& name, double tol) {
  CheckResult r;
  r.name = name;
  r.tol = tol;
  return r;
}

Sites all_sites(std::size_t n) {
  Sites s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  return s;
}

double collective_sum(const QuantumState& state, const std::vector<LocalBasis>& bases, OrderParam s) {
  return skew_information_sum(state, operators_of(collective_set(state.dims(), all_sites(state.num_sites()), bases)),
                              s);
}

// ---------------------------------------------------------------- skew info

CheckResult skew_monotonicity(const SelftestOptions& o) {
  auto r = start("skew.monotonicity_in_s", 1e-10);
  Tracker t{r};
  Rng rng(o.seed + 1);
  const auto grid = order_grid();
  for (std::size_t n = 0; n < o.skew_instances; ++n) {
    const Dims dims = small_dims(rng);
    const auto dim = total_dim(dims);
    const auto state = random_state(dims, uniform(rng, 2, dim), rng);
    const Operator x = random_hermitian(dim, rng);
    double prev = skew_information(state, x, grid[0]);
    double worst = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double cur = skew_information(state, x, grid[i]);
      worst = std::max(worst, prev - cur);
      prev = cur;
    }
    worst = std::max(worst, prev - variance(state, x));
    t.observe(worst, "instance " + std::to_string(n));
  }
  return r;
}

CheckResult skew_pure_equals_variance(const SelftestOptions& o) {
  auto r = start("skew.pure_state_equals_variance", 1e-9);
  Tracker t{r};
  Rng rng(o.seed + 2);
  for (std::size_t n = 0; n < o.skew_instances; ++n) {
    const Dims dims = small_dims(rng);
    const auto state = random_pure_state(dims, rng);
    const Operator x = random_hermitian(total_dim(dims), rng);
    const double v = variance(state, x);
    double worst = 0.0;
    for (auto s : order_grid()) worst = std::max(worst, std::abs(skew_information(state, x, s) - v));
    t.observe(worst, "instance " + std::to_string(n));
  }
  return r;
}

CheckResult skew_convexity(const SelftestOptions& o, bool convex_range) {
  auto r = start(convex_range ? "skew.convexity" : "skew.convexity_below_minus_one", 1e-9);
  Tracker t{r};
  Rng rng(o.seed + (convex_range ? 3 : 15));
  const auto orders = order_range(convex_range);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  for (std::size_t n = 0; n < o.skew_instances; ++n) {
    const Dims dims = small_dims(rng);
    const auto dim = total_dim(dims);
    const auto a = random_state(dims, uniform(rng, 1, dim), rng);
    const auto b = random_state(dims, uniform(rng, 1, dim), rng);
    const double p = unit(rng);
    const auto mixed = QuantumState::from_density(dims, p * a.rho() + (1.0 - p) * b.rho());
    const Operator x = random_hermitian(dim, rng);
    const OrderParam s = pick_order(orders, rng);
    const double lhs = skew_information(mixed, x, s);
    const double rhs = p * skew_information(a, x, s) + (1.0 - p) * skew_information(b, x, s);
    t.observe(lhs - rhs, "instance " + std::to_string(n) + " (s=" + s.to_string() + ")");
  }
  return r;
}

CheckResult skew_additivity(const SelftestOptions& o) {
  auto r = start("skew.additivity", 1e-9);
  Tracker t{r};
  Rng rng(o.seed + 4);
  for (std::size_t n = 0; n < o.skew_instances; ++n) {
    const std::size_t sites = uniform(rng, 2, 3);
    Dims dims;
    for (std::size_t i = 0; i < sites; ++i) dims.push_back(uniform(rng, 2, 3));
    const OrderParam s = random_order(rng);

    Operator rho = Operator::Ones(1, 1);
    Operator x = Operator::Zero(static_cast<Eigen::Index>(total_dim(dims)),
                                static_cast<Eigen::Index>(total_dim(dims)));
    double separate = 0.0;
    for (std::size_t i = 0; i < sites; ++i) {
      const auto local = random_state({dims[i]}, uniform(rng, 1, dims[i]), rng);
      const Operator xi = random_hermitian(dims[i], rng);
      separate += skew_information(local, xi, s);
      rho = kron(rho, local.rho());
      x += embed(xi, i, dims);
    }
    const auto product = QuantumState::from_density(dims, rho);
    t.observe(std::abs(skew_information(product, x, s) - separate), "instance " + std::to_string(n));
  }
  return r;
}

CheckResult skew_nonnegativity(const SelftestOptions& o) {
  auto r = start("skew.nonnegativity", 1e-12);
  Tracker t{r};
  Rng rng(o.seed + 5);
  for (std::size_t n = 0; n < o.skew_instances; ++n) {
    const Dims dims = small_dims(rng);
    const auto dim = total_dim(dims);
    const auto state = random_state(dims, uniform(rng, 1, dim), rng);
    const Operator x = random_hermitian(dim, rng);
    double worst = 0.0;
    for (auto s : order_grid()) worst = std::max(worst, -skew_information(state, x, s));
    t.observe(worst, "instance " + std::to_string(n));
  }
  return r;
}

// ---------------------------------------------------------------- matrix core

CheckResult partial_trace_consistency(const SelftestOptions& o) {
  auto r = start("matrix.partial_trace_consistency", 1e-12);
  Tracker t{r};
  Rng rng(o.seed + 6);
  for (std::size_t n = 0; n < 50; ++n) {
    const Dims dims = uniform(rng, 0, 1) ? Dims{2, 3, 2} : Dims{2, 2, 2, 2};
    const auto state = random_state(dims, uniform(rng, 1, 6), rng);
    // Keep site 0 and the last site; trace out the middle in one or two steps.
    const Sites keep{0, dims.size() - 1};
    const Operator direct = partial_trace(state.rho(), state.dims(), keep);
    Sites drop_first;
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (i != 1) drop_first.push_back(i);
    const auto step1 = partial_trace(state, drop_first);
    Sites keep2{0, step1.num_sites() - 1};
    const Operator twice = partial_trace(step1.rho(), step1.dims(), keep2);
    t.observe((direct - twice).cwiseAbs().maxCoeff(), "instance " + std::to_string(n));
  }
  return r;
}

CheckResult eigen_reconstruction(const SelftestOptions& o) {
  auto r = start("matrix.eigendecomposition_reconstruction", 1e-9);
  Tracker t{r};
  Rng rng(o.seed + 7);
  for (std::size_t n = 0; n < 40; ++n) {
    const std::size_t dim = uniform(rng, 1, 64);
    const Operator a = random_hermitian(dim, rng);
    const auto spec = eigendecompose(a);
    const Operator rebuilt = spec.vectors * spec.values.cast<Complex>().asDiagonal() * spec.vectors.adjoint();
    const Operator gram = spec.vectors.adjoint() * spec.vectors;
    double worst = (a - rebuilt).cwiseAbs().maxCoeff();
    worst = std::max(worst, (gram - identity(dim)).cwiseAbs().maxCoeff());
    for (Eigen::Index l = 1; l < spec.values.size(); ++l)
      worst = std::max(worst, spec.values(l) - spec.values(l - 1));
    t.observe(worst, "dimension " + std::to_string(dim));
  }
  return r;
}

// ---------------------------------------------------------------- observables / collective sums

CheckResult basis_independence(const SelftestOptions& o) {
  auto r = start("collective.basis_independence", 1e-9);
  Tracker t{r};
  Rng rng(o.seed + 8);
  static const std::array<Dims, 4> shapes = {Dims{2, 2, 2}, Dims{3, 3}, Dims{2, 2, 2, 2}, Dims{3, 3, 3}};
  for (std::size_t n = 0; n < o.rotations; ++n) {
    const Dims dims = shapes[n % shapes.size()];
    const std::size_t d = dims.front();
    const auto state = random_state(dims, uniform(rng, 1, 4), rng);
    const OrderParam s = random_order(rng);
    // One rotation shared by every site: the collective sum only sees sum_u G_u (x) G_u.
    const Eigen::MatrixXd rot = random_orthogonal(d * d, rng);
    std::vector<LocalBasis> plain(dims.size(), padded_basis(d, d));
    std::vector<LocalBasis> rotated(dims.size(), rotate_native(padded_basis(d, d), rot));
    const double a = collective_sum(state, plain, s);
    const double b = collective_sum(state, rotated, s);
    t.observe(std::abs(a - b), "rotation " + std::to_string(n));
  }
  return r;
}

CheckResult subsystem_bound(const SelftestOptions& o) {
  auto r = start("collective.subsystem_bound", 1e-9);
  Tracker t{r};
  Rng rng(o.seed + 9);
  static const std::array<Dims, 4> shapes = {Dims{2, 2, 2, 2}, Dims{2, 3, 2, 2}, Dims{3, 2, 3, 2}, Dims{3, 3, 2, 3}};
  for (std::size_t n = 0; n < o.subsystem_states; ++n) {
    const Dims dims = shapes[n % shapes.size()];
    const int d = static_cast<int>(*std::max_element(dims.begin(), dims.end()));
    const std::size_t rank = n % 3 == 0 ? 1 : uniform(rng, 1, 5);
    const auto state = random_state(dims, rank, rng);
    const OrderParam s = random_order(rng);
    for (unsigned mask = 1; mask < (1u << dims.size()); ++mask) {
      Sites gamma;
      for (std::size_t i = 0; i < dims.size(); ++i)
        if (mask & (1u << i)) gamma.push_back(i);
      const auto reduced = partial_trace(state, gamma);
      // Collective operators act on the reduced register but pad to the global max dimension.
      std::vector<LocalBasis> bases;
      for (auto site : gamma) bases.push_back(padded_basis(dims[site], static_cast<std::size_t>(d)));
      const double sum = collective_sum(reduced, bases, s);
      t.observe(sum - bound_gamma(static_cast<int>(gamma.size()), d),
                "state " + std::to_string(n) + " subset mask " + std::to_string(mask));
    }
  }
  return r;
}

CheckResult single_site_eigenbasis(const SelftestOptions& o) {
  auto r = start("collective.single_site_eigenbasis", 1e-9);
  Tracker t{r};
  Rng rng(o.seed + 10);
  for (std::size_t n = 0; n < 60; ++n) {
    const std::size_t di = uniform(rng, 2, 4);
    const std::size_t d = uniform(rng, di, 4);
    const auto state = random_state({di}, uniform(rng, 1, di), rng);
    const OrderParam s = random_order(rng);
    const auto& lam = state.eigenvalues();
    const auto& phi = state.eigenvectors();

    // Basis built from the state's own eigenvectors.
    std::vector<Operator> own;
    for (std::size_t m = 0; m < di; ++m)
      for (std::size_t k = m + 1; k < di; ++k) {
        const Operator outer = phi.col(static_cast<Eigen::Index>(m)) * phi.col(static_cast<Eigen::Index>(k)).adjoint();
        own.push_back((outer + outer.adjoint()) / std::sqrt(2.0));
        own.push_back(Complex(0.0, -1.0) * (outer - outer.adjoint()) / std::sqrt(2.0));
      }
    for (std::size_t l = 0; l < di; ++l)
      own.push_back(phi.col(static_cast<Eigen::Index>(l)) * phi.col(static_cast<Eigen::Index>(l)).adjoint());

    double closed = static_cast<double>(di) - 1.0;
    for (std::size_t m = 0; m < di; ++m)
      for (std::size_t k = 0; k < di; ++k)
        if (m != k) closed -= power_mean(s, lam(static_cast<Eigen::Index>(m)), lam(static_cast<Eigen::Index>(k)));

    const double via_own = skew_information_sum(state, own, s);
    const double via_gm = skew_information_sum(state, padded_basis(di, d).operators, s);
    double worst = std::max(std::abs(via_own - closed), std::abs(via_gm - via_own));
    worst = std::max(worst, via_gm - static_cast<double>(d - 1));
    t.observe(worst, "instance " + std::to_string(n));
  }
  return r;
}

CheckResult slotted_identities(const SelftestOptions&) {
  auto r = start("observables.slotted_identities", 1e-12);
  Tracker t{r};
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t di = 2; di <= std::min<std::size_t>(3, d); ++di) {
      const auto h = slotted_basis(di, d);
      Operator sq = Operator::Zero(static_cast<Eigen::Index>(di), static_cast<Eigen::Index>(di));
      for (const auto& g : h.operators) sq += g * g;
      t.observe((sq - static_cast<double>(di) * identity(di)).cwiseAbs().maxCoeff(),
                "sum H^2, d_i=" + std::to_string(di) + " d=" + std::to_string(d));
      for (std::size_t dj = 2; dj <= std::min<std::size_t>(3, d); ++dj) {
        const auto hj = slotted_basis(dj, d);
        Operator cross = Operator::Zero(static_cast<Eigen::Index>(di * dj), static_cast<Eigen::Index>(di * dj));
        for (std::size_t u = 0; u < h.operators.size(); ++u) cross += kron(h.operators[u], hj.operators[u]);
        t.observe(extreme_eigenvalues(cross).max - 1.0, "lambda_max sum H(x)H, d_i=" + std::to_string(di) +
                                                            " d_j=" + std::to_string(dj) + " d=" + std::to_string(d));
      }
    }
  return r;
}

CheckResult basis_orthonormality(const SelftestOptions&) {
  auto r = start("observables.orthonormality", 1e-12);
  Tracker t{r};
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto g = gellmann_basis(d);
    double worst = 0.0;
    for (std::size_t u = 0; u < g.size(); ++u) {
      worst = std::max(worst, hermiticity_defect(g[u]));
      for (std::size_t v = 0; v < g.size(); ++v) {
        const double expected = u == v ? 1.0 : 0.0;
        worst = std::max(worst, std::abs((g[u] * g[v]).trace() - expected));
      }
    }
    t.observe(worst, "d=" + std::to_string(d));
    for (std::size_t di = 2; di <= d; ++di) {
      const auto b = padded_basis(di, d);
      const double zeros_ok = b.zero_count() == d * d - di * di ? 0.0 : 1.0;
      t.observe(zeros_ok, "zero padding d_i=" + std::to_string(di) + " d=" + std::to_string(d));
    }
  }
  return r;
}

CheckResult permutation_equivalence(const SelftestOptions& o) {
  auto r = start("observables.padded_vs_h_ordering", 1e-9);
  Tracker t{r};
  Rng rng(o.seed + 11);
  // Equal site dimensions, plus single sites padded to a larger d: in both cases the
  // relabelling acts identically on every member of the collective sum.
  for (std::size_t n = 0; n < 40; ++n) {
    const bool single = n % 2 == 0;
    const std::size_t di = uniform(rng, 2, 3);
    const std::size_t d = single ? uniform(rng, di, 4) : di;
    const Dims dims = single ? Dims{di} : Dims(uniform(rng, 2, 3), di);
    const auto state = random_state(dims, uniform(rng, 1, 4), rng);
    const OrderParam s = random_order(rng);
    std::vector<LocalBasis> padded, h;
    for (auto dd : dims) {
      padded.push_back(padded_basis(dd, d));
      h.push_back(slotted_basis(dd, d));
    }
    t.observe(std::abs(collective_sum(state, padded, s) - collective_sum(state, h, s)),
              "instance " + std::to_string(n));
  }
  return r;
}

// ---------------------------------------------------------------- criteria

CheckResult bound_hierarchy(const SelftestOptions&) {
  auto r = start("criteria.bound_hierarchy", 0.0);
  Tracker t{r};
  for (int n = 2; n <= 10; ++n)
    for (int d = 2; d <= 4; ++d) {
      double worst = 0.0;
      for (int k = 3; k <= n; ++k) worst = std::max(worst, bound_S(n, k, d) - bound_S(n, k - 1, d));
      for (int k = 2; k <= n - 1; ++k) worst = std::max(worst, bound_P(n, k - 1, d) - bound_P(n, k, d));
      const double base = n * (d - 1.0);
      worst = std::max(worst, std::abs(bound_S(n, n, d) - base));
      worst = std::max(worst, std::abs(bound_P(n, 1, d) - base));
      t.observe(worst, "N=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  return r;
}

CheckResult variance_range_bound(const SelftestOptions& o) {
  auto r = start("criteria.variance_range_bound", 1e-10);
  Tracker t{r};
  Rng rng(o.seed + 12);
  for (std::size_t n = 0; n < 200; ++n) {
    const Dims dims = small_dims(rng);
    const auto dim = total_dim(dims);
    const auto state = random_state(dims, uniform(rng, 1, dim), rng);
    const Operator a = random_hermitian(dim, rng);
    const auto e = extreme_eigenvalues(a);
    t.observe(variance(state, a) - 0.25 * (e.max - e.min) * (e.max - e.min), "instance " + std::to_string(n));
  }
  return r;
}

CheckResult detection_monotone_in_s(const SelftestOptions&) {
  auto r = start("criteria.detection_monotone_in_s", 0.0);
  Tracker t{r};
  const auto grid = order_grid();
  const auto dicke_fam = dicke_family(6);
  const auto ghz_fam = ghz_family(6);
  const auto sz = pauli_spec(6, 0, 0, 1);
  std::vector<std::pair<std::string, QuantumState>> states;
  for (double p : {0.3, 0.45, 0.6, 0.78, 0.9}) states.emplace_back("dicke p=" + format_sig(p), dicke_fam.at(p));
  for (auto [p, q] : {std::pair{0.5, 0.2}, {0.7, 0.1}, {0.3, 0.6}, {0.85, 0.0}})
    states.emplace_back("ghz p=" + format_sig(p) + " q=" + format_sig(q), ghz_fam.at(p, q));

  for (const auto& [label, state] : states) {
    std::vector<double> lhs1, lhs2;
    for (auto s : grid) {
      lhs1.push_back(prop1_lhs(state, s));
      lhs2.push_back(prop2_lhs(state, sz, s));
    }
    std::vector<Mode> modes;
    for (int k = 2; k <= 6; ++k) modes.push_back(Mode::separable(k));
    for (int k = 1; k <= 5; ++k) modes.push_back(Mode::producible(k));
    for (const auto& mode : modes) {
      const double b1 = mode.kind == ModeKind::separable ? bound_S(6, mode.k, 2) : bound_P(6, mode.k, 2);
      const double b2 = prop2_bound(6, mode, sz);
      bool seen1 = false, seen2 = false;
      double broken = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const bool v1 = lhs1[i] - b1 > kVerdictTol;
        const bool v2 = lhs2[i] - b2 > kVerdictTol;
        if (seen1 && !v1) broken = 1.0;
        if (seen2 && !v2) broken = 1.0;
        seen1 = seen1 || v1;
        seen2 = seen2 || v2;
      }
      t.observe(broken, label + " " + mode.name() + " k=" + std::to_string(mode.k));
    }
  }
  return r;
}

// Random dims for the soundness fuzz: N in [2, 6], each site 2 or 3, at most 96 amplitudes.
Dims fuzz_dims(Rng& rng) {
  const std::size_t n = uniform(rng, 2, 6);
  Dims dims(n, 2);
  for (auto& d : dims)
    if (uniform(rng, 0, 2) == 0) d = 3;
  while (total_dim(dims) > 96) *std::find(dims.begin(), dims.end(), 3) = 2;
  return dims;
}

WeightedObservableSpec random_spec(const Dims& dims, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  WeightedObservableSpec spec;
  for (auto d : dims) {
    SiteTerms t;
    const std::size_t m = uniform(rng, 1, 3);
    for (std::size_t l = 0; l < m; ++l) {
      t.weights.push_back(gauss(rng));
      t.observables.push_back(random_hermitian(d, rng));
    }
    spec.sites.push_back(std::move(t));
  }
  return spec;
}

CheckResult soundness(const SelftestOptions& o, ModeKind kind, bool convex_range) {
  const bool sep = kind == ModeKind::separable;
  std::string name = sep ? "soundness.k_separable" : "soundness.k_producible";
  if (!convex_range) name += "_below_minus_one";
  auto r = start(name, kVerdictTol);
  Tracker t{r};
  Rng rng(o.seed + (sep ? 13 : 14));
  const auto orders = order_range(convex_range);
  for (std::size_t n = 0; n < o.fuzz_states; ++n) {
    const Dims dims = fuzz_dims(rng);
    const int sites = static_cast<int>(dims.size());
    const int k = sep ? static_cast<int>(uniform(rng, 2, static_cast<std::size_t>(sites)))
                      : static_cast<int>(uniform(rng, 1, static_cast<std::size_t>(sites - 1)));
    const int terms = static_cast<int>(uniform(rng, 1, 3));
    const std::uint64_t seed = rng();
    const auto state = sep ? random_k_separable(dims.size(), dims, k, terms, seed)
                           : random_k_producible(dims.size(), dims, k, terms, seed);
    const Mode mode{kind, k};
    const auto spec = random_spec(dims, rng);
    double worst = -std::numeric_limits<double>::infinity();
    for (auto s : orders) {
      worst = std::max(worst, prop1_evaluate(state, s, mode).margin);
      worst = std::max(worst, prop2_evaluate(state, spec, s, mode).margin);
    }
    std::ostringstream where;
    where << "state " << n << " (N=" << sites << ", k=" << k << ", terms=" << terms << ", seed=" << seed << ")";
    t.observe(worst, where.str());
  }
  return r;
}

// ---------------------------------------------------------------- reproduction

CheckResult table_check(const SelftestOptions&, const std::string& name) {
  auto r = start("reproduction." + name, 5e-4);
  Tracker t{r};
  const auto report = reproduce_table(name, 5e-4);
  std::vector<double> computed;
  for (const auto& row : report.rows) {
    if (!row.computed) {
      t.observe(1.0, "k=" + std::to_string(row.k) + " has no threshold");
      continue;
    }
    computed.push_back(*row.computed);
    if (row.asserted) t.observe(row.deviation, "k=" + std::to_string(row.k));
  }
  // Thresholds move monotonically with k: down for separable, up for producible.
  const bool sep = report.mode == ModeKind::separable;
  for (std::size_t i = 1; i < computed.size(); ++i) {
    const double step = sep ? computed[i] - computed[i - 1] : computed[i - 1] - computed[i];
    t.observe(std::max(0.0, step), "monotonicity between rows " + std::to_string(i - 1) + " and " + std::to_string(i));
  }
  return r;
}

CheckResult prop2_spot_values(const SelftestOptions&) {
  auto r = start("reproduction.prop2_ghz_spot_values", 1e-9);
  Tracker t{r};
  const auto state = ghz(6);
  const auto sz = pauli_spec(6, 0, 0, 1);
  for (auto s : order_grid()) t.observe(std::abs(prop2_lhs(state, sz, s) - 36.0), "lhs at s=" + s.to_string());
  const std::array<std::pair<Mode, double>, 3> expected = {
      std::pair{Mode::separable(2), 26.0}, {Mode::producible(3), 18.0}, {Mode::producible(5), 26.0}};
  for (const auto& [mode, bound] : expected) {
    const auto rep = prop2_evaluate(state, sz, OrderParam::neg_infinity(), mode);
    t.observe(std::abs(rep.bound - bound), mode.name() + " k=" + std::to_string(mode.k) + " bound");
    t.observe(rep.violated ? 0.0 : 1.0, mode.name() + " k=" + std::to_string(mode.k) + " verdict");
  }
  return r;
}

}  // namespace

std::vector<NamedCheck> selftest_checks() {
  return {
      {"skew.monotonicity_in_s", skew_monotonicity},
      {"skew.pure_state_equals_variance", skew_pure_equals_variance},
      {"skew.convexity", [](const SelftestOptions& o) { return skew_convexity(o, true); }},
      {"skew.convexity_below_minus_one", [](const SelftestOptions& o) { return skew_convexity(o, false); }},
      {"skew.additivity", skew_additivity},
      {"skew.nonnegativity", skew_nonnegativity},
      {"matrix.partial_trace_consistency", partial_trace_consistency},
      {"matrix.eigendecomposition_reconstruction", eigen_reconstruction},
      {"observables.orthonormality", basis_orthonormality},
      {"observables.padded_vs_h_ordering", permutation_equivalence},
      {"observables.slotted_identities", slotted_identities},
      {"collective.basis_independence", basis_independence},
      {"collective.subsystem_bound", subsystem_bound},
      {"collective.single_site_eigenbasis", single_site_eigenbasis},
      {"criteria.bound_hierarchy", bound_hierarchy},
      {"criteria.variance_range_bound", variance_range_bound},
      {"criteria.detection_monotone_in_s", detection_monotone_in_s},
      {"soundness.k_separable", [](const SelftestOptions& o) { return soundness(o, ModeKind::separable, true); }},
      {"soundness.k_producible", [](const SelftestOptions& o) { return soundness(o, ModeKind::producible, true); }},
      {"soundness.k_separable_below_minus_one",
       [](const SelftestOptions& o) { return soundness(o, ModeKind::separable, false); }},
      {"soundness.k_producible_below_minus_one",
       [](const SelftestOptions& o) { return soundness(o, ModeKind::producible, false); }},
      {"reproduction.prop2_ghz_spot_values", prop2_spot_values},
      {"reproduction.table1", [](const SelftestOptions& o) { return table_check(o, "table1"); }},
      {"reproduction.table2", [](const SelftestOptions& o) { return table_check(o, "table2"); }},
  };
}

CheckResult run_check(const std::string& name, const SelftestOptions& options) {
  for (const auto& c : selftest_checks())
    if (c.name == name) {
      const auto t0 = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = c.run(options);
      } catch (const std::exception& e) {
        r.name = name;
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return r;
    }
  throw DomainError("unknown selftest check '" + name + "'");
}

std::vector<CheckResult> run_selftest(const SelftestOptions& options,
                                      const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> out;
  for (const auto& c : selftest_checks()) {
    if (!options.include_tables && c.name.rfind("reproduction.table", 0) == 0) continue;
    out.push_back(run_check(c.name, options));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace skewent
