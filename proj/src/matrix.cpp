#include "skewent/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace skewent {

std::size_t total_dim(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

double hermiticity_defect(const Operator& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

void require_hermitian(const Operator& a, const char* what) {
  if (a.rows() != a.cols())
    throw DimensionError(std::string(what) + ": matrix is not square");
  const double defect = hermiticity_defect(a);
  if (defect > kHermitianTol)
    throw ValidationError(std::string(what) + ": not Hermitian (max |A - A^+| = " +
                          std::to_string(defect) + ")");
}

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Ket kron(const Ket& a, const Ket& b) {
  Ket out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Operator identity(std::size_t d) {
  return Operator::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
}

Operator embed(const Operator& op, std::size_t site, std::span<const std::size_t> dims) {
  if (site >= dims.size())
    throw DimensionError("embed: site " + std::to_string(site) + " out of range");
  if (op.rows() != op.cols() || static_cast<std::size_t>(op.rows()) != dims[site])
    throw DimensionError("embed: operator dimension does not match site dimension");

  // Identity blocks on either side: I_left ⊗ op ⊗ I_right, built without
  // materialising the identity factors.
  const std::size_t left = total_dim(dims.subspan(0, site));
  const std::size_t right = total_dim(dims.subspan(site + 1));
  const auto d = static_cast<Eigen::Index>(dims[site]);
  const auto r = static_cast<Eigen::Index>(right);
  const Eigen::Index block = d * r;
  Operator out = Operator::Zero(static_cast<Eigen::Index>(left) * block,
                                static_cast<Eigen::Index>(left) * block);
  for (Eigen::Index l = 0; l < static_cast<Eigen::Index>(left); ++l)
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        const Complex v = op(i, j);
        if (v == Complex{}) continue;
        for (Eigen::Index t = 0; t < r; ++t) out(l * block + i * r + t, l * block + j * r + t) = v;
      }
  return out;
}

Spectrum eigendecompose(const Operator& a) {
  require_hermitian(a, "eigendecompose");
  // Symmetrise so round-off in the input does not leak into the solver.
  const Operator h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(h);
  if (solver.info() != Eigen::Success) throw ValidationError("eigendecompose: solver failed");

  // Eigen returns ascending order; reverse to descending. Reversal keeps ties in a
  // fixed (reversed) order, so results are deterministic.
  const Eigen::Index n = h.rows();
  Spectrum out{Eigen::VectorXd(n), Eigen::MatrixXcd(n, n)};
  for (Eigen::Index l = 0; l < n; ++l) {
    out.values(l) = solver.eigenvalues()(n - 1 - l);
    out.vectors.col(l) = solver.eigenvectors().col(n - 1 - l);
  }
  return out;
}

EigenRange extreme_eigenvalues(const Operator& a) {
  require_hermitian(a, "extreme_eigenvalues");
  if (a.rows() == 0) throw DimensionError("extreme_eigenvalues: empty operator");
  const Operator h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ValidationError("extreme_eigenvalues: solver failed");
  return {solver.eigenvalues()(0), solver.eigenvalues()(h.rows() - 1)};
}

std::size_t QuantumState::max_site_dim() const noexcept {
  return dims_.empty() ? 0 : *std::max_element(dims_.begin(), dims_.end());
}

double QuantumState::purity() const { return spectrum_.values.squaredNorm(); }

QuantumState QuantumState::from_density(Dims dims, Operator rho) {
  if (dims.empty()) throw DimensionError("state: no sites");
  for (auto d : dims)
    if (d == 0) throw DimensionError("state: zero site dimension");
  if (rho.rows() != rho.cols() || static_cast<std::size_t>(rho.rows()) != total_dim(dims))
    throw DimensionError("state: density matrix size does not match product of site dimensions");
  require_hermitian(rho, "state");

  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol)
    throw ValidationError("state: trace " + std::to_string(tr) + " differs from 1");

  Spectrum spec = eigendecompose(rho);
  for (Eigen::Index l = 0; l < spec.values.size(); ++l) {
    double& v = spec.values(l);
    if (v < -kClampTol)
      throw ValidationError("state: negative eigenvalue " + std::to_string(v));
    if (v <= kZeroEigenTol) v = 0.0;
  }
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return QuantumState(std::move(dims), std::move(rho), std::move(spec));
}

QuantumState QuantumState::from_ket(Dims dims, const Ket& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw DomainError("state: zero ket");
  const Ket unit = psi / norm;
  return from_density(std::move(dims), unit * unit.adjoint());
}

namespace {

// Row-major digit strides for a mixed-radix index over `dims`.
std::vector<std::size_t> strides_of(std::span<const std::size_t> dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
  return s;
}

// Full-space offsets contributed by each configuration of the given sites.
std::vector<std::size_t> offsets_for(const Sites& sites, std::span<const std::size_t> dims,
                                     const std::vector<std::size_t>& strides) {
  std::vector<std::size_t> offsets{0};
  for (auto site : sites) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[site]);
    for (auto o : offsets)
      for (std::size_t v = 0; v < dims[site]; ++v) next.push_back(o + v * strides[site]);
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

Operator partial_trace(const Operator& rho, std::span<const std::size_t> dims, const Sites& keep) {
  if (keep.empty()) throw DomainError("partial_trace: empty subset");
  if (static_cast<std::size_t>(rho.rows()) != total_dim(dims))
    throw DimensionError("partial_trace: matrix size does not match dims");
  Sites kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw DomainError("partial_trace: repeated site");
  if (kept.back() >= dims.size()) throw DimensionError("partial_trace: site out of range");

  Sites traced;
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (!std::binary_search(kept.begin(), kept.end(), i)) traced.push_back(i);

  const auto strides = strides_of(dims);
  const auto kept_off = offsets_for(kept, dims, strides);
  const auto traced_off = offsets_for(traced, dims, strides);
  const auto n = static_cast<Eigen::Index>(kept_off.size());

  Operator out = Operator::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      Complex acc{};
      for (auto t : traced_off)
        acc += rho(static_cast<Eigen::Index>(kept_off[a] + t),
                   static_cast<Eigen::Index>(kept_off[b] + t));
      out(a, b) = acc;
    }
  return out;
}

QuantumState partial_trace(const QuantumState& state, const Sites& keep) {
  Operator reduced = partial_trace(state.rho(), state.dims(), keep);
  Sites kept = keep;
  std::sort(kept.begin(), kept.end());
  Dims sub;
  for (auto i : kept) sub.push_back(state.dims()[i]);
  return QuantumState::from_density(std::move(sub), std::move(reduced));
}

Operator convex_sum(std::span<const double> weights, std::span<const Operator> ops) {
  if (weights.size() != ops.size() || ops.empty())
    throw DimensionError("convex_sum: weights and operators differ in count");
  Operator out = Operator::Zero(ops.front().rows(), ops.front().cols());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].rows() != out.rows() || ops[i].cols() != out.cols())
      throw DimensionError("convex_sum: operator sizes differ");
    if (!(weights[i] > 0.0)) throw DomainError("convex_sum: weights must be positive");
    out += weights[i] * ops[i];
  }
  return out;
}

}  // namespace skewent
