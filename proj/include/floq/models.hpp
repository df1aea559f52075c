#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <vector>

#include "floq/eigen_sym.hpp"
#include "floq/hilbert.hpp"
#include "floq/mat.hpp"

namespace floq {

enum class ModelKind { ising, bose_hubbard };

// Periodic modulation f(t) = (1 - cos(omega t)) / 2. Satisfies f(0)=0,
// f(T/2)=1 and the time symmetry f(T-t)=f(t).
struct DriveEnvelope {
    double omega = 0.0;
    double period() const { return 2.0 * M_PI / omega; }
};

double f_envelope(double t, const DriveEnvelope& env);

struct ModelParams {
    double J = 1.0;      // energy unit; everything is expressed in units of J
    double W = 0.0;      // disorder strength, mu_l in {0, W}
    double F = 0.0;      // drive amplitude
    double U_int = 0.0;  // on-site interaction (boson only)
    double omega = 0.0;  // drive angular frequency
};

// H(t) = H0 + f(t) V with H0 diagonal in the Fock basis and V real symmetric.
// Immutable after construction.
struct DrivenModel {
    ModelKind kind = ModelKind::ising;
    FockBasis basis;
    std::vector<double> H0_diag;
    RMat V;
    ModelParams params;
    std::vector<double> mu;     // per-site disorder, entries in {0, W}
    uint64_t disorder_seed = 0;

    // Eigendecomposition of V, built once. For the Ising drive F*sum_l X_l the
    // eigenbasis is the Walsh-Hadamard transform, so `v_decomp` stays empty and
    // the propagator takes the fast-transform route.
    std::shared_ptr<const EighResult> v_decomp;
    bool v_is_uniform_x = false;

    int dim() const { return basis.size(); }
};

// Disordered Ising chain in a driven global transverse field.
// H0(z) = sum_l mu_l (1-2 z_l) + J sum_l (1-2 z_l)(1-2 z_{l+1}),
// V(z,z') = F when z and z' differ in exactly one bit, else 0.
DrivenModel build_ising(int sites, double W, double J, double F, uint64_t disorder_seed);

// Bose-Hubbard chain with modulated hopping.
// H0(n) = sum_l [mu_l n_l + U/2 n_l (n_l - 1)],
// V = -F sum_l (a^dag_l a_{l+1} + h.c.) within the fixed-n basis.
DrivenModel build_bose_hubbard(int sites, int n_particles, double W, double J, double F,
                               double U_int, uint64_t disorder_seed);

// Uniformly random Fock-basis ordinal (the randomized product initial state).
int random_initial_state(const FockBasis& basis, uint64_t seed);

}  // namespace floq
