#include "floq/statevector.hpp"

#include <cmath>

#include "floq/errors.hpp"
#include "floq/ising_map.hpp"

namespace floq {

namespace {

constexpr int kMaxQubits = 12;

// Gate matrices in the convention of the partition-function mapping:
// SX = [[i,1],[1,i]]/sqrt2, SY = [[1,-1],[1,1]]/sqrt2 (pi/2 Bloch rotations up
// to the mapping's phase), H the usual Hadamard, T = diag(1, e^{i pi/4}).
struct Gate2 {
    cplx m00, m01, m10, m11;
};

Gate2 gate_matrix(Gate g) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const cplx i_unit(0.0, 1.0);
    switch (g) {
        case Gate::H: return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
        case Gate::SX:
            return {i_unit * inv_sqrt2, inv_sqrt2, inv_sqrt2, i_unit * inv_sqrt2};
        case Gate::SY: return {inv_sqrt2, -inv_sqrt2, inv_sqrt2, inv_sqrt2};
        case Gate::SYT: return {inv_sqrt2, inv_sqrt2, -inv_sqrt2, inv_sqrt2};
        default: throw std::invalid_argument("gate_matrix: not a 2x2 dense gate");
    }
}

}  // namespace

Statevector::Statevector(int n) : n_qubits(n) {
    if (n < 1 || n > kMaxQubits)
        throw size_limit_error("statevector: qubit count must be in [1, " +
                               std::to_string(kMaxQubits) + "]");
    amp.assign(1ULL << n, cplx(0.0, 0.0));
}

void Statevector::set_basis_state(const std::vector<uint8_t>& bits) {
    if (static_cast<int>(bits.size()) != n_qubits)
        throw std::invalid_argument("statevector: bit-string length mismatch");
    std::fill(amp.begin(), amp.end(), cplx(0.0, 0.0));
    size_t idx = 0;
    for (uint8_t b : bits) idx = (idx << 1) | (b & 1);
    amp[idx] = 1.0;
}

void Statevector::apply(const GateOp& op) {
    const size_t dim = amp.size();
    if (op.kind == Gate::T) {
        const cplx t_phase = std::polar(1.0, 0.25 * M_PI);
        const size_t mask = 1ULL << (n_qubits - 1 - op.q1);
#pragma omp parallel for schedule(static)
        for (size_t i = 0; i < dim; ++i)
            if (i & mask) amp[i] *= t_phase;
        return;
    }
    if (op.kind == Gate::CZ) {
        const size_t mask =
            (1ULL << (n_qubits - 1 - op.q1)) | (1ULL << (n_qubits - 1 - op.q2));
#pragma omp parallel for schedule(static)
        for (size_t i = 0; i < dim; ++i)
            if ((i & mask) == mask) amp[i] = -amp[i];
        return;
    }
    const Gate2 m = gate_matrix(op.kind);
    const size_t stride = 1ULL << (n_qubits - 1 - op.q1);
#pragma omp parallel for schedule(static)
    for (size_t base = 0; base < dim; base += 2 * stride)
        for (size_t i = base; i < base + stride; ++i) {
            const cplx a0 = amp[i];
            const cplx a1 = amp[i + stride];
            amp[i] = m.m00 * a0 + m.m01 * a1;
            amp[i + stride] = m.m10 * a0 + m.m11 * a1;
        }
}

void Statevector::apply_circuit(const Circuit& circuit) {
    for (const auto& layer : circuit.layers)
        for (const auto& op : layer) apply(op);
}

cplx amplitude_oracle(const Circuit& circuit, const std::vector<uint8_t>& z0,
                      const std::vector<uint8_t>& z, int repetitions) {
    if (repetitions < 0) throw std::invalid_argument("amplitude_oracle: M must be >= 0");
    Statevector psi(circuit.n_qubits);
    psi.set_basis_state(z0);
    for (int m = 0; m < repetitions; ++m) psi.apply_circuit(circuit);
    size_t idx = 0;
    for (uint8_t b : z) idx = (idx << 1) | (b & 1);
    return psi.amp[idx];
}

}  // namespace floq
