#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "floq/stats.hpp"

namespace floq {

// Parsed key = value experiment description. Unknown keys are rejected.
struct ExperimentConfig {
    std::string experiment;
    std::string model = "ising";  // ising | bose_hubbard | coe | goe | cue

    int L = 8;
    int n_particles = -1;  // bose_hubbard; -1 means half filling
    double W = 1.0;
    double F = 2.5;
    double U_int = 1.0;
    double omega = 8.0;
    int N = 256;  // matrix dimension for coe / goe / cue ensembles

    std::vector<long long> M_list = {1, 25};
    std::vector<double> t_list;
    int realizations = 20;
    int n_samples = 500;
    uint64_t master_seed = 1;
    std::string output_dir = "out";
    int threads = 0;  // 0 = runtime default

    int bins_r = 40;
    int bins_d = 60;
    int bins_pt = 48;
    double delta = 1.0;
    double convergence_tol = 1e-8;

    int circuits = 100;  // verify_ising_map
    int trials = 5;
    int max_qubits = 4;
    int max_layers = 8;

    static ExperimentConfig from_file(const std::string& path);
    static ExperimentConfig from_text(const std::string& text);
};

// Runs the experiment, writing summary.json and per-curve CSV artifacts into
// output_dir. Re-running an identical config produces bit-identical files.
void run_experiment(const ExperimentConfig& config);

// One spectrally decomposed disorder realization plus the integrator and
// diagonalization residual bookkeeping.
struct EnsembleMember {
    std::vector<double> phases;
    RMat eigvecs;
    int z0 = 0;
    int steps = 0;
    double conv_residual = 0.0;
    double symmetry_residual = 0.0;
    double unitarity_residual = 0.0;
    double recon_residual = 0.0;
    double eigvec_residual = 0.0;
};

// Parallel sweep over disorder realizations (realization r uses
// seed_stream(master_seed, r)); results are indexed by realization so every
// later reduction is order-deterministic.
std::vector<EnsembleMember> sweep_driven_ensemble(const ModelSweep& sweep,
                                                  uint64_t master_seed, int realizations,
                                                  double tol = 1e-8,
                                                  bool full_residuals = true);

}  // namespace floq
