#include "skewent/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "skewent/random.hpp"

namespace skewent {

namespace {

using Index = Eigen::Index;

Dims qubits(std::size_t n) { return Dims(n, 2); }

void require_ghz_size(std::size_t n) {
  if (n < 2) throw DomainError("ghz: needs at least two qubits");
  if (n > 20) throw DomainError("ghz: too many qubits for dense storage");
}

Ket single_site_ket(std::size_t d, char label) {
  Ket k = Ket::Zero(static_cast<Index>(d));
  if (label >= '0' && label <= '9') {
    const auto level = static_cast<std::size_t>(label - '0');
    if (level >= d) throw DomainError(std::string("product: level '") + label + "' exceeds site dimension");
    k(static_cast<Index>(level)) = 1.0;
    return k;
  }
  if (d != 2) throw DomainError(std::string("product: label '") + label + "' needs a qubit site");
  const double h = 1.0 / std::sqrt(2.0);
  switch (label) {
    case '+': k << h, h; break;
    case '-': k << h, -h; break;
    case 'r': k << h, Complex(0.0, h); break;
    case 'l': k << h, Complex(0.0, -h); break;
    default: throw DomainError(std::string("product: unknown site label '") + label + "'");
  }
  return k;
}

std::vector<double> random_weights(int terms, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(static_cast<std::size_t>(terms));
  for (auto& x : w) x = expo(rng) + 1e-3;
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= total;
  return w;
}

Sites shuffled_sites(std::size_t n, std::mt19937_64& rng) {
  Sites order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

Partition cut(const Sites& order, const std::vector<std::size_t>& sizes) {
  Partition p;
  std::size_t pos = 0;
  for (auto size : sizes) {
    Sites block(order.begin() + static_cast<std::ptrdiff_t>(pos),
                order.begin() + static_cast<std::ptrdiff_t>(pos + size));
    std::sort(block.begin(), block.end());
    p.push_back(std::move(block));
    pos += size;
  }
  return p;
}

// Shuffle, then cut into exactly k nonempty blocks at k-1 distinct random positions.
Partition random_k_blocks(std::size_t n, int k, std::mt19937_64& rng) {
  const Sites order = shuffled_sites(n, rng);
  std::vector<std::size_t> positions(n - 1);
  std::iota(positions.begin(), positions.end(), std::size_t{1});
  std::shuffle(positions.begin(), positions.end(), rng);
  std::vector<std::size_t> cuts(positions.begin(), positions.begin() + (k - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::size_t> sizes;
  std::size_t prev = 0;
  for (auto c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(n - prev);
  return cut(order, sizes);
}

// Shuffle, then cut greedily into blocks of random size at most k.
Partition random_bounded_blocks(std::size_t n, int k, std::mt19937_64& rng) {
  const Sites order = shuffled_sites(n, rng);
  std::vector<std::size_t> sizes;
  std::size_t remaining = n;
  while (remaining > 0) {
    const std::size_t cap = std::min<std::size_t>(static_cast<std::size_t>(k), remaining);
    std::uniform_int_distribution<std::size_t> pick(1, cap);
    const std::size_t size = pick(rng);
    sizes.push_back(size);
    remaining -= size;
  }
  return cut(order, sizes);
}

void check_random_args(std::size_t n, const Dims& dims, int terms) {
  if (dims.size() != n) throw DimensionError("random state: dims must list one entry per site");
  if (terms < 1) throw DomainError("random state: needs at least one term");
  for (auto d : dims)
    if (d < 2) throw DimensionError("random state: site dimensions must be >= 2");
}

template <class PartitionFn>
QuantumState random_mixture(const Dims& dims, int terms, std::uint64_t seed, PartitionFn&& draw,
                            RandomMixtureInfo* info) {
  std::mt19937_64 rng(seed);
  const auto weights = random_weights(terms, rng);
  const auto dim = static_cast<Index>(total_dim(dims));
  Operator rho = Operator::Zero(dim, dim);
  RandomMixtureInfo local;
  for (int t = 0; t < terms; ++t) {
    Partition p = draw(rng);
    std::vector<Ket> blocks;
    for (const auto& block : p) {
      std::size_t bdim = 1;
      for (auto site : block) bdim *= dims[site];
      blocks.push_back(random_ket(bdim, rng));
    }
    const Ket psi = tensor_blocks(dims, p, blocks);
    rho += weights[static_cast<std::size_t>(t)] * (psi * psi.adjoint());
    local.partitions.push_back(std::move(p));
  }
  local.weights = weights;
  if (info) *info = std::move(local);
  return QuantumState::from_density(dims, std::move(rho));
}

}  // namespace

Ket dicke_ket(std::size_t n, std::size_t m) {
  if (n < 1 || n > 20) throw DomainError("dicke: qubit count out of range");
  if (m > n) throw DomainError("dicke: excitation count exceeds qubit count");
  const std::size_t dim = std::size_t{1} << n;
  Ket k = Ket::Zero(static_cast<Index>(dim));
  std::size_t count = 0;
  for (std::size_t i = 0; i < dim; ++i)
    if (static_cast<std::size_t>(std::popcount(i)) == m) {
      k(static_cast<Index>(i)) = 1.0;
      ++count;
    }
  return k / std::sqrt(static_cast<double>(count));
}

QuantumState dicke(std::size_t n, std::size_t m) { return QuantumState::from_ket(qubits(n), dicke_ket(n, m)); }

Ket ghz_ket(std::size_t n) {
  require_ghz_size(n);
  const auto dim = static_cast<Index>(std::size_t{1} << n);
  Ket k = Ket::Zero(dim);
  k(0) = 1.0 / std::sqrt(2.0);
  k(dim - 1) = 1.0 / std::sqrt(2.0);
  return k;
}

QuantumState ghz(std::size_t n) { return QuantumState::from_ket(qubits(n), ghz_ket(n)); }

Ket ghz_phase_ket(std::size_t n) {
  require_ghz_size(n);
  const auto dim = static_cast<Index>(std::size_t{1} << n);
  Ket k = Ket::Zero(dim);
  k(0) = 1.0 / std::sqrt(2.0);
  k(dim - 1) = Complex(0.0, -1.0 / std::sqrt(2.0));
  return k;
}

QuantumState ghz_phase(std::size_t n) { return QuantumState::from_ket(qubits(n), ghz_phase_ket(n)); }

QuantumState white_noise(const Dims& dims) {
  const std::size_t dim = total_dim(dims);
  return QuantumState::from_density(dims, identity(dim) / static_cast<double>(dim));
}

QuantumState product_state(const Dims& dims, const std::string& labels) {
  if (labels.size() != dims.size())
    throw DimensionError("product: need one label per site (" + std::to_string(dims.size()) +
                         " sites, " + std::to_string(labels.size()) + " labels)");
  if (dims.empty()) throw DimensionError("product: no sites");
  Ket psi = single_site_ket(dims[0], labels[0]);
  for (std::size_t i = 1; i < dims.size(); ++i) psi = kron(psi, single_site_ket(dims[i], labels[i]));
  return QuantumState::from_ket(dims, psi);
}

Ket tensor_blocks(const Dims& dims, const Partition& partition, const std::vector<Ket>& blocks) {
  if (partition.size() != blocks.size()) throw DimensionError("tensor_blocks: one ket per block");
  std::vector<int> seen(dims.size(), 0);
  for (std::size_t b = 0; b < partition.size(); ++b) {
    std::size_t bdim = 1;
    for (auto site : partition[b]) {
      if (site >= dims.size()) throw DimensionError("tensor_blocks: site out of range");
      ++seen[site];
      bdim *= dims[site];
    }
    if (static_cast<std::size_t>(blocks[b].size()) != bdim)
      throw DimensionError("tensor_blocks: block ket has the wrong dimension");
  }
  for (int c : seen)
    if (c != 1) throw DomainError("tensor_blocks: blocks must partition the sites");

  const std::size_t dim = total_dim(dims);
  Ket out(static_cast<Index>(dim));
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = dims.size(); i-- > 0;) {
      digits[i] = rest % dims[i];
      rest /= dims[i];
    }
    Complex amp = 1.0;
    for (std::size_t b = 0; b < partition.size(); ++b) {
      std::size_t local = 0;
      for (auto site : partition[b]) local = local * dims[site] + digits[site];
      amp *= blocks[b](static_cast<Index>(local));
    }
    out(static_cast<Index>(idx)) = amp;
  }
  return out;
}

QuantumState random_k_separable(std::size_t n, const Dims& dims, int k, int terms, std::uint64_t seed,
                                RandomMixtureInfo* info) {
  if (k < 2 || static_cast<std::size_t>(k) > n)
    throw DomainError("random_k_separable: requires 2 <= k <= N");
  check_random_args(n, dims, terms);
  return random_mixture(
      dims, terms, seed, [&](std::mt19937_64& rng) { return random_k_blocks(n, k, rng); }, info);
}

QuantumState random_k_producible(std::size_t n, const Dims& dims, int k, int terms,
                                 std::uint64_t seed, RandomMixtureInfo* info) {
  if (k < 1 || static_cast<std::size_t>(k) + 1 > n)
    throw DomainError("random_k_producible: requires 1 <= k <= N-1");
  check_random_args(n, dims, terms);
  return random_mixture(
      dims, terms, seed, [&](std::mt19937_64& rng) { return random_bounded_blocks(n, k, rng); }, info);
}

}  // namespace skewent
