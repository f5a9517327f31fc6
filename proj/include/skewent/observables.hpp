#pragma once

#include <string>
#include <vector>

#include "skewent/matrix.hpp"

namespace skewent {

/// Orthonormal Hermitian basis of a d-level site, in the fixed order
///   d-1 traceless diagonal operators, I/sqrt(d),
///   symmetric (|m><n| + |n><m|)/sqrt(2) for m < n, ordered by n then m,
///   antisymmetric -i(|m><n| - |n><m|)/sqrt(2) in the same pair order.
std::vector<Operator> gellmann_basis(std::size_t d);

/// A site's observable family padded with zero operators to a common count d^2.
struct LocalBasis {
  std::size_t site_dim = 0;
  std::size_t padded_count = 0;
  std::vector<Operator> operators;

  std::size_t zero_count() const;
};

/// Gell-Mann basis of the site followed by d^2 - d_i^2 zero operators.
LocalBasis padded_basis(std::size_t site_dim, std::size_t max_dim);

/// The same members relabelled so each family sits in a slot sized for the
/// largest site: diagonal operators at 0..d_i-2, zeros up to d-2, I/sqrt(d_i) at
/// d-1, then the symmetric and antisymmetric families each padded to d(d-1)/2.
/// Indices here are 0-based, so the identity member is at index d - 1.
LocalBasis slotted_basis(std::size_t site_dim, std::size_t max_dim);

enum class BasisOrder { padded, slotted };

LocalBasis local_basis(BasisOrder order, std::size_t site_dim, std::size_t max_dim);

/// Replaces the native members with G'_u = sum_v R(u, v) G_v; zero members stay zero.
LocalBasis rotate_native(const LocalBasis& basis, const Eigen::MatrixXd& rotation);

/// Hermitian operator on the subsystem of `support`, carrying a readable label.
struct CollectiveObservable {
  Sites support;
  Operator op;
  std::string label;
};

/// d^2 collective operators sum_{i in gamma} M_i^(u) on the subsystem of gamma,
/// with d = max(dims) over all sites. Site order inside the subsystem is ascending.
std::vector<CollectiveObservable> collective_set(const Dims& dims, const Sites& gamma,
                                                 BasisOrder order = BasisOrder::padded);

/// Same construction from explicit per-site bases (one per entry of gamma).
std::vector<CollectiveObservable> collective_set(const Dims& dims, const Sites& gamma,
                                                 const std::vector<LocalBasis>& bases);

std::vector<Operator> operators_of(const std::vector<CollectiveObservable>& set);

/// Per-site weights c_i and observables X_i; the site operator is c_i . X_i.
struct SiteTerms {
  std::vector<double> weights;
  std::vector<Operator> observables;
};

struct WeightedObservableSpec {
  std::vector<SiteTerms> sites;

  /// Throws on length mismatch or non-Hermitian members.
  void validate() const;
  Dims dims() const;
  /// c_i . X_i for one site.
  Operator site_operator(std::size_t site) const;
};

/// Every site uses (sigma_x, sigma_y, sigma_z) with the same weights (cx, cy, cz).
WeightedObservableSpec pauli_spec(std::size_t n_sites, double cx, double cy, double cz);

const Operator& pauli_x();
const Operator& pauli_y();
const Operator& pauli_z();

/// X(c) = sum_i embed(c_i . X_i).
CollectiveObservable build_weighted(const WeightedObservableSpec& spec);

struct OperatorRange {
  double lo;
  double hi;
};

/// (min_i lambda_min(c_i . X_i), max_i lambda_max(c_i . X_i)).
OperatorRange site_operator_range(const WeightedObservableSpec& spec);

}  // namespace skewent
