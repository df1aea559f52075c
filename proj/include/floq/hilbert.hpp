#pragma once

#include <cstdint>
#include <vector>

namespace floq {

enum class BasisKind { spin, boson };

// Enumerated many-body Fock basis. States are occupation tuples in strict
// lexicographic order; for spins the ordinal is the big-endian binary value of
// the tuple. Immutable after construction, safe for concurrent reads.
struct FockBasis {
    BasisKind kind = BasisKind::spin;
    int sites = 0;
    int local_dim = 2;
    int n_particles = 0;  // boson kind only
    std::vector<std::vector<uint8_t>> states;

    int size() const { return static_cast<int>(states.size()); }

    // Ordinal of an occupation tuple; throws if the tuple is not in the basis.
    int index_of(const std::vector<uint8_t>& state) const;
};

// All 2^L spin-1/2 configurations. Guard: 1 <= L <= 14.
FockBasis enumerate_spin_basis(int sites);

// All occupation tuples of L sites summing to n bosons, lexicographic.
// Guard: C(n+L-1, n) <= 50000.
FockBasis enumerate_bose_basis(int sites, int n_particles);

// Binomial coefficient used by the boson dimension guard.
uint64_t binomial(uint64_t n, uint64_t k);

}  // namespace floq
