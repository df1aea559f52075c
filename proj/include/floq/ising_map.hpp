#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "floq/circuit.hpp"
#include "floq/mat.hpp"

namespace floq {

// Classical spin node: one maximal wire segment between consecutive
// non-diagonal gates of one qubit line. fixed = 0 marks a free spin.
struct IsingNode {
    int row = 0;
    int pos = 0;
    int fixed = 0;  // 0 free, otherwise +1 / -1
};

// Complex-weighted Ising model equivalent to a circuit amplitude:
// <z|U^M|z0> = 2^{-G/2} sum_s exp[(i pi/4)(sum_i h_i s_i + sum_ij J_ij s_i s_j)].
// Fields are stored in doubled units so every h_i is an exact half-integer and
// the gate constants can be folded into the pinned boundary fields.
struct IsingGraph {
    std::vector<IsingNode> nodes;
    std::vector<int64_t> h2;                           // h_i = h2[i] / 2
    std::map<std::pair<int, int>, int64_t> edges;      // (i<j) -> integer J_ij
    int64_t gate_count = 0;                            // G, non-diagonal gates

    int free_spins() const;
    // JSON object with keys {nodes, h, edges, pins, G}.
    std::string to_json() const;
};

// Circuit-to-Ising mapping: node construction over maximal runs between
// non-diagonal gates, per-gate field/coupling accumulation, boundary pinning
// via s = 1 - 2z. M repetitions are realized by flattening the gate list M
// times so the period-joining identifications hold by construction.
IsingGraph map_to_ising(const Circuit& circuit, const std::vector<uint8_t>& z0,
                        const std::vector<uint8_t>& z, int repetitions);

// Brute-force partition function over the free spins (guard: <= 24). The phase
// of every configuration is a multiple of pi/8, so the sum is accumulated as
// exact integer counts of the sixteen roots of unity.
cplx partition_function(const IsingGraph& graph);

// Dense statevector amplitude <z| C^M |z0>, the independent verification path.
cplx amplitude_oracle(const Circuit& circuit, const std::vector<uint8_t>& z0,
                      const std::vector<uint8_t>& z, int repetitions);

// Max |partition_function - amplitude_oracle| over `trials` random (z0, z)
// pairs.
double verify_mapping(const Circuit& circuit, int repetitions, int trials, uint64_t seed);

}  // namespace floq
