#include "floq/ising_map.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "floq/errors.hpp"
#include "floq/rng.hpp"
#include "floq/statevector.hpp"

namespace floq {

namespace {
constexpr int kMaxFreeSpins = 24;
}

int IsingGraph::free_spins() const {
    int n = 0;
    for (const auto& node : nodes)
        if (node.fixed == 0) ++n;
    return n;
}

std::string IsingGraph::to_json() const {
    std::ostringstream out;
    out << "{\"nodes\":[";
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (i) out << ',';
        out << "[" << nodes[i].row << ',' << nodes[i].pos << "]";
    }
    out << "],\"h\":[";
    for (size_t i = 0; i < h2.size(); ++i) {
        if (i) out << ',';
        out << 0.5 * static_cast<double>(h2[i]);
    }
    out << "],\"edges\":[";
    bool first = true;
    for (const auto& [key, j] : edges) {
        if (!first) out << ',';
        first = false;
        out << "[" << key.first << ',' << key.second << ',' << j << "]";
    }
    out << "],\"pins\":[";
    first = true;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].fixed == 0) continue;
        if (!first) out << ',';
        first = false;
        out << "[" << i << ',' << nodes[i].fixed << "]";
    }
    out << "],\"G\":" << gate_count << "}";
    return out.str();
}

namespace {

struct GraphBuilder {
    IsingGraph g;
    std::vector<int> current;  // current node id per row
    std::vector<int> next_pos;
    int64_t const2 = 0;  // constant part of E(s), doubled units

    explicit GraphBuilder(int rows) : current(rows), next_pos(rows, 1) {
        for (int r = 0; r < rows; ++r) {
            current[r] = static_cast<int>(g.nodes.size());
            g.nodes.push_back({r, 0, 0});
            g.h2.push_back(0);
        }
    }

    int advance(int row) {
        const int id = static_cast<int>(g.nodes.size());
        g.nodes.push_back({row, next_pos[row]++, 0});
        g.h2.push_back(0);
        current[row] = id;
        return id;
    }

    void add_edge(int a, int b, int64_t j) {
        if (a > b) std::swap(a, b);
        g.edges[{a, b}] += j;
    }

    void apply(const GateOp& op) {
        switch (op.kind) {
            case Gate::SX: {
                const int left = current[op.q1];
                const int right = advance(op.q1);
                add_edge(left, right, +1);
                const2 += 2;
                ++g.gate_count;
                break;
            }
            case Gate::SY: {
                const int left = current[op.q1];
                const int right = advance(op.q1);
                add_edge(left, right, -1);
                g.h2[left] += -2;
                g.h2[right] += +2;
                const2 += 2;
                ++g.gate_count;
                break;
            }
            case Gate::SYT: {
                const int left = current[op.q1];
                const int right = advance(op.q1);
                add_edge(left, right, -1);
                g.h2[left] += +2;
                g.h2[right] += -2;
                const2 += 2;
                ++g.gate_count;
                break;
            }
            case Gate::H: {
                const int left = current[op.q1];
                const int right = advance(op.q1);
                add_edge(left, right, +1);
                g.h2[left] += -2;
                g.h2[right] += -2;
                const2 += 2;
                ++g.gate_count;
                break;
            }
            case Gate::T: {
                g.h2[current[op.q1]] += -1;
                const2 += 1;
                break;
            }
            case Gate::CZ: {
                add_edge(current[op.q1], current[op.q2], +1);
                g.h2[current[op.q1]] += -2;
                g.h2[current[op.q2]] += -2;
                const2 += 2;
                break;
            }
        }
    }

    void pin(int node_id, int sign) {
        int& fixed = g.nodes[node_id].fixed;
        if (fixed != 0 && fixed != sign)
            throw mapping_error("node pinned to both signs (row " +
                                std::to_string(g.nodes[node_id].row) + ")");
        fixed = sign;
    }
};

}  // namespace

IsingGraph map_to_ising(const Circuit& circuit, const std::vector<uint8_t>& z0,
                        const std::vector<uint8_t>& z, int repetitions) {
    const int rows = circuit.n_qubits;
    if (static_cast<int>(z0.size()) != rows || static_cast<int>(z.size()) != rows)
        throw std::invalid_argument("map_to_ising: bit-string length mismatch");
    if (repetitions < 1) throw std::invalid_argument("map_to_ising: M must be >= 1");

    GraphBuilder b(rows);
    for (int m = 0; m < repetitions; ++m)
        for (const auto& layer : circuit.layers)
            for (const auto& op : layer) b.apply(op);

    for (int r = 0; r < rows; ++r) {
        // First node of the row carries the input pin, the current node the
        // readout pin.
        int first_id = -1;
        for (size_t i = 0; i < b.g.nodes.size(); ++i)
            if (b.g.nodes[i].row == r && b.g.nodes[i].pos == 0) {
                first_id = static_cast<int>(i);
                break;
            }
        b.pin(first_id, 1 - 2 * static_cast<int>(z0[r]));
        b.pin(b.current[r], 1 - 2 * static_cast<int>(z[r]));
    }

    // Fold the accumulated gate constants into a pinned boundary field so that
    // E(s) keeps the plain sum form h.s + J.ss.
    int anchor = -1;
    for (size_t i = 0; i < b.g.nodes.size(); ++i)
        if (b.g.nodes[i].fixed != 0) {
            anchor = static_cast<int>(i);
            break;
        }
    b.g.h2[anchor] += b.const2 * b.g.nodes[anchor].fixed;

    if (b.g.free_spins() > kMaxFreeSpins)
        throw size_limit_error("map_to_ising: " + std::to_string(b.g.free_spins()) +
                               " free spins exceed the enumeration guard " +
                               std::to_string(kMaxFreeSpins));
    return b.g;
}

cplx partition_function(const IsingGraph& graph) {
    const int n_nodes = static_cast<int>(graph.nodes.size());

    // Collect free spins and fold pins into effective fields / the constant.
    std::vector<int> free_ids;
    std::vector<int> free_slot(n_nodes, -1);
    for (int i = 0; i < n_nodes; ++i)
        if (graph.nodes[i].fixed == 0) {
            free_slot[i] = static_cast<int>(free_ids.size());
            free_ids.push_back(i);
        }
    const int n_free = static_cast<int>(free_ids.size());
    if (n_free > kMaxFreeSpins)
        throw size_limit_error("partition_function: free spins exceed the guard");

    int64_t base2 = 0;  // doubled-units constant from pinned terms
    std::vector<int64_t> h2_eff(n_free);
    for (int f = 0; f < n_free; ++f) h2_eff[f] = graph.h2[free_ids[f]];
    std::vector<std::vector<std::pair<int, int64_t>>> adj(n_free);
    for (int i = 0; i < n_nodes; ++i)
        if (graph.nodes[i].fixed != 0) base2 += graph.h2[i] * graph.nodes[i].fixed;
    for (const auto& [key, j] : graph.edges) {
        if (j == 0) continue;
        const auto& na = graph.nodes[key.first];
        const auto& nb = graph.nodes[key.second];
        if (na.fixed != 0 && nb.fixed != 0) {
            base2 += 2 * j * na.fixed * nb.fixed;
        } else if (na.fixed != 0) {
            h2_eff[free_slot[key.second]] += 2 * j * na.fixed;
        } else if (nb.fixed != 0) {
            h2_eff[free_slot[key.first]] += 2 * j * nb.fixed;
        } else {
            adj[free_slot[key.first]].push_back({free_slot[key.second], j});
            adj[free_slot[key.second]].push_back({free_slot[key.first], j});
        }
    }

    // Gray-code walk; every exponent is a multiple of pi/8, so configurations
    // are tallied into the sixteen roots of unity exactly.
    uint64_t root_counts[16] = {0};
    std::vector<int> spin(n_free, 1);
    int64_t e2 = base2;
    for (int f = 0; f < n_free; ++f) {
        e2 += h2_eff[f];
        for (const auto& [g2, j] : adj[f])
            if (g2 > f) e2 += 2 * j;
    }
    int idx = static_cast<int>(((e2 % 16) + 16) % 16);
    ++root_counts[idx];
    const uint64_t n_conf = 1ULL << n_free;
    for (uint64_t t = 1; t < n_conf; ++t) {
        const int f = std::countr_zero(t);
        int64_t around = h2_eff[f];
        for (const auto& [g2, j] : adj[f]) around += 2 * j * spin[g2];
        const int64_t delta = -2 * spin[f] * around;
        spin[f] = -spin[f];
        idx = (idx + static_cast<int>(((delta % 16) + 16) % 16)) & 15;
        ++root_counts[idx];
    }

    cplx sum = 0.0;
    for (int k = 0; k < 16; ++k) {
        if (root_counts[k] == 0) continue;
        sum += static_cast<double>(root_counts[k]) *
               std::polar(1.0, M_PI * k / 8.0);
    }
    return std::pow(2.0, -0.5 * static_cast<double>(graph.gate_count)) * sum;
}

double verify_mapping(const Circuit& circuit, int repetitions, int trials, uint64_t seed) {
    Rng rng(seed);
    const int n = circuit.n_qubits;
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        std::vector<uint8_t> z0(n), z(n);
        for (int q = 0; q < n; ++q) {
            z0[q] = rng.coin() ? 1 : 0;
            z[q] = rng.coin() ? 1 : 0;
        }
        const IsingGraph g = map_to_ising(circuit, z0, z, repetitions);
        const cplx zpart = partition_function(g);
        const cplx amp = amplitude_oracle(circuit, z0, z, repetitions);
        worst = std::max(worst, std::abs(zpart - amp));
    }
    return worst;
}

}  // namespace floq
