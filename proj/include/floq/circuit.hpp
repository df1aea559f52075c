#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace floq {

// Gate set {H, sqrt(X), sqrt(Y), sqrt(Y)^T, T, CZ}. H, SX, T and CZ are
// symmetric matrices; SY transposes to SYT, which is why the transposed half
// of a COE circuit only needs the SY <-> SYT swap.
enum class Gate { H, SX, SY, SYT, T, CZ };

bool gate_is_diagonal(Gate g);
const char* gate_name(Gate g);

struct GateOp {
    Gate kind;
    int q1;
    int q2 = -1;  // CZ only
};

struct Circuit {
    int n_qubits = 0;
    std::vector<std::vector<GateOp>> layers;

    int total_gates() const;
    // Throws if a layer touches a qubit twice or an index is out of range.
    void validate() const;

    // One layer per line, tokens "H q", "SX q", "SY q", "SYT q", "T q",
    // "CZ q1 q2".
    std::string to_text() const;
    static Circuit from_text(const std::string& text);
};

// COE-structured random circuit realizing U^T U: an all-H layer, then
// `n_layers` cycles of uniform single-qubit gates from {SX, SY, T} followed by
// CZ brickwork (even pairs on even cycles, odd pairs on odd cycles); then the
// same gates reversed with SY replaced by SYT.
Circuit build_coe_circuit(int n_qubits, int n_layers, uint64_t seed);

}  // namespace floq
