#pragma once

#include <vector>

#include "floq/mat.hpp"
#include "floq/models.hpp"

namespace floq {

// One-period Floquet operator together with its quasi-energy decomposition
// U = sum_e exp(-i phase_e) |v_e><v_e|, eigenvectors real (COE structure).
struct FloquetSpectrum {
    CMat U;
    std::vector<double> phases;  // ascending in [0, 2*pi)
    RMat eigvecs;                // column e = |E_e>
    double symmetry_residual = 0.0;
    double unitarity_residual = 0.0;
    double recon_residual = 0.0;    // max |U - V diag(e^{-i phase}) V^T|
    double eigvec_residual = 0.0;   // max column norm of U v - e^{-i phase} v
};

// Converged propagator plus the integrator bookkeeping that ends up in the
// experiment summaries.
struct ConvergedOperator {
    CMat U;
    int steps = 0;          // step count of the returned operator
    double residual = 0.0;  // max |U(steps/2) - U(steps)|
};

// Second-order symmetric split-step product over one period with midpoint
// envelope sampling. steps must be even and >= 16.
CMat compute_floquet_operator(const DrivenModel& model, const DriveEnvelope& env, int steps);

// max entrywise |U(steps) - U(2 steps)|.
double verify_convergence(const DrivenModel& model, const DriveEnvelope& env, int steps);

// Doubles the step count (from `start_steps`) until the self-convergence
// residual drops below `tol`; throws integrator_error if the residual fails to
// decrease over three consecutive doublings. Returns the finer operator.
ConvergedOperator compute_floquet_converged(const DrivenModel& model, const DriveEnvelope& env,
                                            double tol = 1e-8, int start_steps = 64);

// Spectral decomposition of a symmetric unitary U = X + iY: diagonalize the
// commuting real symmetric pair (X, Y) jointly, phases from atan2(-y, x).
// check_residuals=false skips the O(N^3) reconstruction checks (used for bulk
// ensemble sampling where only phases are consumed).
FloquetSpectrum diagonalize_symmetric_unitary(const CMat& u, bool check_residuals = true);

// p_M(z) = |<z| U^M |z0>|^2 from the spectral decomposition.
std::vector<double> output_probabilities(const FloquetSpectrum& spec, int z0, long long cycles);

// Complex amplitudes <z| U^M |z0>, the quantity behind p_M.
std::vector<cplx> output_amplitudes(const FloquetSpectrum& spec, int z0, long long cycles);

// exp(-i t H) for a real symmetric H via eigendecomposition.
CMat static_evolution(const RMat& hamiltonian, double t);

}  // namespace floq
