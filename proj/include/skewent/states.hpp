#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewent/matrix.hpp"

namespace skewent {

/// Equal superposition of the C(N, m) qubit kets with Hamming weight m.
Ket dicke_ket(std::size_t n, std::size_t m);
QuantumState dicke(std::size_t n, std::size_t m);

/// (|0...0> + |1...1>) / sqrt(2).
Ket ghz_ket(std::size_t n);
QuantumState ghz(std::size_t n);

/// (|0...0> - i|1...1>) / sqrt(2).
Ket ghz_phase_ket(std::size_t n);
QuantumState ghz_phase(std::size_t n);

/// Maximally mixed state on the given sites.
QuantumState white_noise(const Dims& dims);

/// Product of single-site kets. Each entry of `labels` is one site:
/// digits 0-9 select a computational basis ket, and for qubits '+', '-',
/// 'r' (|+i>) and 'l' (|-i>) select the x and y eigenstates.
QuantumState product_state(const Dims& dims, const std::string& labels);

/// Partition of sites into blocks; each block lists its sites in ascending order.
using Partition = std::vector<Sites>;

/// Tensor product of block kets laid out on the full register. `blocks[b]` acts on
/// partition[b] with site order as listed.
Ket tensor_blocks(const Dims& dims, const Partition& partition, const std::vector<Ket>& blocks);

struct RandomMixtureInfo {
  std::vector<Partition> partitions;
  std::vector<double> weights;
};

/// Mixture of `terms` pure states, each a product of Haar-random block states over a
/// random partition into exactly k blocks. k-separable by construction.
QuantumState random_k_separable(std::size_t n, const Dims& dims, int k, int terms, std::uint64_t seed,
                                RandomMixtureInfo* info = nullptr);

/// As random_k_separable, with every block holding at most k sites.
QuantumState random_k_producible(std::size_t n, const Dims& dims, int k, int terms,
                                 std::uint64_t seed, RandomMixtureInfo* info = nullptr);

}  // namespace skewent
