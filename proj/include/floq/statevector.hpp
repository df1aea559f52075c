#pragma once

#include <vector>

#include "floq/circuit.hpp"
#include "floq/mat.hpp"

namespace floq {

// Dense statevector over n <= 12 qubits. Qubit q maps to bit (n-1-q) so that
// the bit-string (z_0 ... z_{n-1}) reads as a big-endian index, matching the
// spin Fock-basis ordering.
struct Statevector {
    int n_qubits = 0;
    std::vector<cplx> amp;

    explicit Statevector(int n);
    void set_basis_state(const std::vector<uint8_t>& bits);
    void apply(const GateOp& op);
    void apply_circuit(const Circuit& circuit);
};

}  // namespace floq
