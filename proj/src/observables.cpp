#include "skewent/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace skewent {

namespace {

using Index = Eigen::Index;

Operator zero_op(std::size_t d) {
  return Operator::Zero(static_cast<Index>(d), static_cast<Index>(d));
}

// Diagonal member l = 0..d-2: (sum_{z<=l} |z><z| - (l+1)|l+1><l+1|) / sqrt((l+1)(l+2)).
Operator diagonal_member(std::size_t d, std::size_t l) {
  Operator g = zero_op(d);
  const double norm = std::sqrt(static_cast<double>((l + 1) * (l + 2)));
  for (std::size_t z = 0; z <= l; ++z) g(static_cast<Index>(z), static_cast<Index>(z)) = 1.0 / norm;
  g(static_cast<Index>(l + 1), static_cast<Index>(l + 1)) = -static_cast<double>(l + 1) / norm;
  return g;
}

Operator symmetric_member(std::size_t d, std::size_t m, std::size_t n) {
  Operator g = zero_op(d);
  const double v = 1.0 / std::sqrt(2.0);
  g(static_cast<Index>(m), static_cast<Index>(n)) = v;
  g(static_cast<Index>(n), static_cast<Index>(m)) = v;
  return g;
}

Operator antisymmetric_member(std::size_t d, std::size_t m, std::size_t n) {
  Operator g = zero_op(d);
  const double v = 1.0 / std::sqrt(2.0);
  g(static_cast<Index>(m), static_cast<Index>(n)) = Complex(0.0, -v);
  g(static_cast<Index>(n), static_cast<Index>(m)) = Complex(0.0, v);
  return g;
}

void check_dims(std::size_t site_dim, std::size_t max_dim, const char* what) {
  if (site_dim < 2) throw DomainError(std::string(what) + ": site dimension must be >= 2");
  if (site_dim > max_dim)
    throw DomainError(std::string(what) + ": site dimension exceeds the maximum dimension");
}

}  // namespace

std::vector<Operator> gellmann_basis(std::size_t d) {
  if (d < 2) throw DomainError("gellmann_basis: dimension must be >= 2");
  std::vector<Operator> out;
  out.reserve(d * d);
  for (std::size_t l = 0; l + 1 < d; ++l) out.push_back(diagonal_member(d, l));
  out.push_back(identity(d) / std::sqrt(static_cast<double>(d)));
  for (std::size_t n = 1; n < d; ++n)
    for (std::size_t m = 0; m < n; ++m) out.push_back(symmetric_member(d, m, n));
  for (std::size_t n = 1; n < d; ++n)
    for (std::size_t m = 0; m < n; ++m) out.push_back(antisymmetric_member(d, m, n));
  return out;
}

std::size_t LocalBasis::zero_count() const {
  return static_cast<std::size_t>(std::count_if(operators.begin(), operators.end(),
                                                [](const Operator& g) { return g.isZero(0.0); }));
}

LocalBasis padded_basis(std::size_t site_dim, std::size_t max_dim) {
  check_dims(site_dim, max_dim, "padded_basis");
  LocalBasis out{site_dim, max_dim * max_dim, gellmann_basis(site_dim)};
  out.operators.resize(out.padded_count, zero_op(site_dim));
  return out;
}

LocalBasis slotted_basis(std::size_t site_dim, std::size_t max_dim) {
  check_dims(site_dim, max_dim, "slotted_basis");
  const std::size_t di = site_dim;
  const std::size_t d = max_dim;
  const std::size_t native_pairs = di * (di - 1) / 2;
  const std::size_t slot_pairs = d * (d - 1) / 2;
  const auto g = gellmann_basis(di);

  LocalBasis out{di, d * d, {}};
  out.operators.reserve(d * d);
  // Diagonal family, padded to d-1 slots.
  for (std::size_t l = 0; l + 1 < di; ++l) out.operators.push_back(g[l]);
  for (std::size_t l = di; l < d; ++l) out.operators.push_back(zero_op(di));
  out.operators.push_back(g[di - 1]);
  // Symmetric then antisymmetric families, each padded to d(d-1)/2 slots.
  for (std::size_t block = 0; block < 2; ++block) {
    const std::size_t first = di + block * native_pairs;
    for (std::size_t p = 0; p < native_pairs; ++p) out.operators.push_back(g[first + p]);
    for (std::size_t p = native_pairs; p < slot_pairs; ++p) out.operators.push_back(zero_op(di));
  }
  return out;
}

LocalBasis local_basis(BasisOrder order, std::size_t site_dim, std::size_t max_dim) {
  return order == BasisOrder::padded ? padded_basis(site_dim, max_dim)
                                     : slotted_basis(site_dim, max_dim);
}

LocalBasis rotate_native(const LocalBasis& basis, const Eigen::MatrixXd& rotation) {
  const std::size_t n = basis.site_dim * basis.site_dim;
  if (static_cast<std::size_t>(rotation.rows()) != n || rotation.rows() != rotation.cols())
    throw DimensionError("rotate_native: rotation must be d_i^2 x d_i^2");
  std::vector<std::size_t> native;
  for (std::size_t u = 0; u < basis.operators.size(); ++u)
    if (!basis.operators[u].isZero(0.0)) native.push_back(u);
  if (native.size() != n) throw DomainError("rotate_native: basis does not hold d_i^2 native members");

  LocalBasis out = basis;
  for (std::size_t a = 0; a < n; ++a) {
    Operator g = zero_op(basis.site_dim);
    for (std::size_t b = 0; b < n; ++b)
      g += rotation(static_cast<Index>(a), static_cast<Index>(b)) * basis.operators[native[b]];
    out.operators[native[a]] = g;
  }
  return out;
}

std::vector<CollectiveObservable> collective_set(const Dims& dims, const Sites& gamma,
                                                 const std::vector<LocalBasis>& bases) {
  if (gamma.empty()) throw DomainError("collective_set: empty subset");
  if (bases.size() != gamma.size())
    throw DimensionError("collective_set: need one basis per site of the subset");
  Sites support = gamma;
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end())
    throw DomainError("collective_set: repeated site");
  if (support.back() >= dims.size()) throw DimensionError("collective_set: site out of range");

  // Bases are given in the caller's gamma order; realign to the sorted support.
  std::vector<const LocalBasis*> aligned(gamma.size());
  Dims sub;
  for (std::size_t pos = 0; pos < support.size(); ++pos) {
    const auto it = std::find(gamma.begin(), gamma.end(), support[pos]);
    aligned[pos] = &bases[static_cast<std::size_t>(it - gamma.begin())];
    sub.push_back(dims[support[pos]]);
    if (aligned[pos]->site_dim != sub.back())
      throw DimensionError("collective_set: basis dimension does not match site");
  }
  const std::size_t count = aligned.front()->padded_count;
  for (const auto* b : aligned)
    if (b->padded_count != count || b->operators.size() != count)
      throw DimensionError("collective_set: bases differ in padded count");

  const std::size_t full = total_dim(sub);
  std::vector<CollectiveObservable> out;
  out.reserve(count);
  for (std::size_t u = 0; u < count; ++u) {
    Operator op = zero_op(full);
    for (std::size_t pos = 0; pos < support.size(); ++pos) {
      const Operator& local = aligned[pos]->operators[u];
      if (local.isZero(0.0)) continue;
      op += embed(local, pos, sub);
    }
    out.push_back({support, std::move(op), "u=" + std::to_string(u + 1)});
  }
  return out;
}

std::vector<CollectiveObservable> collective_set(const Dims& dims, const Sites& gamma,
                                                 BasisOrder order) {
  if (gamma.empty()) throw DomainError("collective_set: empty subset");
  if (dims.empty()) throw DimensionError("collective_set: no sites");
  const std::size_t d = *std::max_element(dims.begin(), dims.end());
  std::vector<LocalBasis> bases;
  for (auto site : gamma) {
    if (site >= dims.size()) throw DimensionError("collective_set: site out of range");
    bases.push_back(local_basis(order, dims[site], d));
  }
  return collective_set(dims, gamma, bases);
}

std::vector<Operator> operators_of(const std::vector<CollectiveObservable>& set) {
  std::vector<Operator> out;
  out.reserve(set.size());
  for (const auto& c : set) out.push_back(c.op);
  return out;
}

const Operator& pauli_x() {
  static const Operator m = (Operator(2, 2) << 0, 1, 1, 0).finished();
  return m;
}

const Operator& pauli_y() {
  static const Operator m =
      (Operator(2, 2) << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)).finished();
  return m;
}

const Operator& pauli_z() {
  static const Operator m = (Operator(2, 2) << 1, 0, 0, -1).finished();
  return m;
}

void WeightedObservableSpec::validate() const {
  if (sites.empty()) throw DomainError("weighted observable: no sites");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const auto& t = sites[i];
    if (t.weights.size() != t.observables.size())
      throw DimensionError("weighted observable: site " + std::to_string(i) +
                           " has mismatched weight and observable counts");
    if (t.observables.empty())
      throw DomainError("weighted observable: site " + std::to_string(i) + " has no observables");
    for (const auto& x : t.observables) {
      if (x.rows() != t.observables.front().rows())
        throw DimensionError("weighted observable: site " + std::to_string(i) +
                             " mixes observable dimensions");
      require_hermitian(x, "weighted observable");
    }
  }
}

Dims WeightedObservableSpec::dims() const {
  Dims out;
  for (const auto& t : sites)
    out.push_back(t.observables.empty() ? 0 : static_cast<std::size_t>(t.observables.front().rows()));
  return out;
}

Operator WeightedObservableSpec::site_operator(std::size_t site) const {
  const auto& t = sites.at(site);
  Operator op = zero_op(static_cast<std::size_t>(t.observables.front().rows()));
  for (std::size_t l = 0; l < t.weights.size(); ++l) op += t.weights[l] * t.observables[l];
  return op;
}

WeightedObservableSpec pauli_spec(std::size_t n_sites, double cx, double cy, double cz) {
  WeightedObservableSpec spec;
  spec.sites.assign(n_sites, SiteTerms{{cx, cy, cz}, {pauli_x(), pauli_y(), pauli_z()}});
  return spec;
}

CollectiveObservable build_weighted(const WeightedObservableSpec& spec) {
  spec.validate();
  const Dims dims = spec.dims();
  Operator op = zero_op(total_dim(dims));
  Sites support;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    support.push_back(i);
    op += embed(spec.site_operator(i), i, dims);
  }
  return {std::move(support), std::move(op), "X(c)"};
}

OperatorRange site_operator_range(const WeightedObservableSpec& spec) {
  spec.validate();
  OperatorRange r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < spec.sites.size(); ++i) {
    const auto e = extreme_eigenvalues(spec.site_operator(i));
    r.lo = std::min(r.lo, e.min);
    r.hi = std::max(r.hi, e.max);
  }
  return r;
}

}  // namespace skewent
