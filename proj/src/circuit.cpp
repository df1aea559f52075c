#include "floq/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "floq/rng.hpp"

namespace floq {

bool gate_is_diagonal(Gate g) { return g == Gate::T || g == Gate::CZ; }

const char* gate_name(Gate g) {
    switch (g) {
        case Gate::H: return "H";
        case Gate::SX: return "SX";
        case Gate::SY: return "SY";
        case Gate::SYT: return "SYT";
        case Gate::T: return "T";
        case Gate::CZ: return "CZ";
    }
    return "?";
}

int Circuit::total_gates() const {
    int n = 0;
    for (const auto& layer : layers) n += static_cast<int>(layer.size());
    return n;
}

void Circuit::validate() const {
    std::vector<int> seen(n_qubits);
    int stamp = 0;
    for (const auto& layer : layers) {
        ++stamp;
        for (const auto& op : layer) {
            const bool two = op.kind == Gate::CZ;
            if (op.q1 < 0 || op.q1 >= n_qubits || (two && (op.q2 < 0 || op.q2 >= n_qubits)))
                throw std::invalid_argument("circuit: qubit index out of range");
            if (two && op.q1 == op.q2)
                throw std::invalid_argument("circuit: CZ needs two distinct qubits");
            if (seen[op.q1] == stamp || (two && seen[op.q2] == stamp))
                throw std::invalid_argument("circuit: two gates touch one qubit in a layer");
            seen[op.q1] = stamp;
            if (two) seen[op.q2] = stamp;
        }
    }
}

std::string Circuit::to_text() const {
    std::ostringstream out;
    for (const auto& layer : layers) {
        bool first = true;
        for (const auto& op : layer) {
            if (!first) out << ' ';
            first = false;
            out << gate_name(op.kind) << ' ' << op.q1;
            if (op.kind == Gate::CZ) out << ' ' << op.q2;
        }
        out << '\n';
    }
    return out.str();
}

Circuit Circuit::from_text(const std::string& text) {
    Circuit c;
    std::istringstream in(text);
    std::string line;
    int max_q = -1;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::vector<GateOp> layer;
        std::string tok;
        while (ls >> tok) {
            GateOp op{Gate::H, -1, -1};
            if (tok == "H") op.kind = Gate::H;
            else if (tok == "SX") op.kind = Gate::SX;
            else if (tok == "SY") op.kind = Gate::SY;
            else if (tok == "SYT") op.kind = Gate::SYT;
            else if (tok == "T") op.kind = Gate::T;
            else if (tok == "CZ") op.kind = Gate::CZ;
            else throw std::invalid_argument("circuit text: unknown token '" + tok + "'");
            if (!(ls >> op.q1)) throw std::invalid_argument("circuit text: missing qubit index");
            if (op.kind == Gate::CZ && !(ls >> op.q2))
                throw std::invalid_argument("circuit text: CZ needs two qubit indices");
            max_q = std::max({max_q, op.q1, op.q2});
            layer.push_back(op);
        }
        c.layers.push_back(std::move(layer));
    }
    c.n_qubits = max_q + 1;
    c.validate();
    return c;
}

Circuit build_coe_circuit(int n_qubits, int n_layers, uint64_t seed) {
    if (n_qubits < 1 || n_layers < 0)
        throw std::invalid_argument("build_coe_circuit: need n_qubits >= 1, n_layers >= 0");
    Rng rng(seed);

    std::vector<std::vector<GateOp>> forward;
    std::vector<GateOp> h_layer;
    for (int q = 0; q < n_qubits; ++q) h_layer.push_back({Gate::H, q, -1});
    forward.push_back(h_layer);

    static const Gate kSingle[3] = {Gate::SX, Gate::SY, Gate::T};
    for (int cycle = 0; cycle < n_layers; ++cycle) {
        std::vector<GateOp> sq;
        for (int q = 0; q < n_qubits; ++q)
            sq.push_back({kSingle[rng.below(3)], q, -1});
        forward.push_back(std::move(sq));
        std::vector<GateOp> cz;
        for (int q = cycle % 2; q + 1 < n_qubits; q += 2)
            cz.push_back({Gate::CZ, q, q + 1});
        if (!cz.empty()) forward.push_back(std::move(cz));
    }

    Circuit c;
    c.n_qubits = n_qubits;
    c.layers = forward;
    // Transposed half: gates in reverse order with SY <-> SYT.
    for (auto it = forward.rbegin(); it != forward.rend(); ++it) {
        std::vector<GateOp> layer = *it;
        std::reverse(layer.begin(), layer.end());
        for (auto& op : layer) {
            if (op.kind == Gate::SY) op.kind = Gate::SYT;
            else if (op.kind == Gate::SYT) op.kind = Gate::SY;
        }
        c.layers.push_back(std::move(layer));
    }
    c.validate();
    return c;
}

}  // namespace floq
