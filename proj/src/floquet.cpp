#include "floq/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "floq/errors.hpp"
#include "floq/kernels.hpp"

namespace floq {

namespace {

std::vector<cplx> phase_vector(const std::vector<double>& h, double scale) {
    std::vector<cplx> d(h.size());
    for (size_t k = 0; k < h.size(); ++k) d[k] = std::polar(1.0, -scale * h[k]);
    return d;
}

// Envelope values at the sub-interval midpoints, mirrored about T/2 so the
// palindromic factor structure holds bit-exactly.
std::vector<double> midpoint_envelopes(const DriveEnvelope& env, int steps) {
    const double dt = env.period() / steps;
    std::vector<double> f(steps);
    for (int k = 0; k < steps / 2; ++k) {
        f[k] = f_envelope((k + 0.5) * dt, env);
        f[steps - 1 - k] = f[k];
    }
    return f;
}

void check_steps(int steps) {
    if (steps < 16 || steps % 2 != 0)
        throw std::invalid_argument("floquet: steps must be even and >= 16");
}

// Fast path for the uniform transverse-field drive V = F sum_l X_l: the
// eigenbasis of V is the Walsh-Hadamard transform and its spectrum is
// F*(L - 2 popcount). Each step applies two column transforms.
CMat propagator_walsh(const DrivenModel& model, const DriveEnvelope& env, int steps) {
    const int dim = model.dim();
    const int sites = model.basis.sites;
    const double dt = env.period() / steps;
    const double drive_f = model.params.F;

    const auto f_mid = midpoint_envelopes(env, steps);
    const auto e_half = phase_vector(model.H0_diag, 0.5 * dt);
    const auto e_full = phase_vector(model.H0_diag, dt);

    std::vector<int> pop(dim);
    for (int i = 0; i < dim; ++i) pop[i] = __builtin_popcount(static_cast<unsigned>(i));

    // Time symmetry of the envelope makes the second half of the product the
    // transpose of the first: U = A E_full A^T with A covering steps
    // n/2 .. n-1. Only half the steps are applied; the join costs one dense
    // product.
    CMat a = CMat::identity(dim);
    std::vector<cplx> lam(dim);
    std::vector<cplx> by_pop(sites + 1);
    const double norm = 1.0 / dim;  // folds the two unnormalized transforms
    auto apply_drive_step = [&](CMat& u, int k) {
        const double c = dt * f_mid[k] * drive_f;
        for (int p = 0; p <= sites; ++p)
            by_pop[p] = std::polar(norm, -c * (sites - 2.0 * p));
        for (int i = 0; i < dim; ++i) lam[i] = by_pop[pop[i]];
        fwht_columns(u);
        scale_rows(u, lam);
        fwht_columns(u);
    };

    apply_drive_step(a, steps / 2);
    for (int k = steps / 2 + 1; k < steps; ++k) {
        scale_rows(a, e_full);
        apply_drive_step(a, k);
    }
    scale_rows(a, e_half);

    CMat at = a.transposed();
    scale_cols(a, e_full);
    return matmul(a, at);
}

// Generic route: V = Q D Q^T precomputed once, each step costs one dense
// complex product through R = Q^T exp(-i dt H0) Q.
CMat propagator_dense(const DrivenModel& model, const DriveEnvelope& env, int steps) {
    const int dim = model.dim();
    const double dt = env.period() / steps;

    std::shared_ptr<const EighResult> vd = model.v_decomp;
    if (!vd) vd = std::make_shared<const EighResult>(eigh(model.V));
    const RMat& q = vd->vectors;
    const RMat qt = q.transposed();

    const auto f_mid = midpoint_envelopes(env, steps);
    const auto e_half = phase_vector(model.H0_diag, 0.5 * dt);
    const auto e_full = phase_vector(model.H0_diag, dt);

    // R = Q^T diag(e_full) Q
    CMat r = matmul(qt, [&] {
        CMat eq(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) eq(i, j) = e_full[i] * q(i, j);
        return eq;
    }());

    std::vector<cplx> lam(dim);
    auto fill_lam = [&](int k) {
        const double c = dt * f_mid[k];
        for (int i = 0; i < dim; ++i) lam[i] = std::polar(1.0, -c * vd->values[i]);
    };

    // Same palindromic halving as the fast path: the full diagonal-R product
    // is B R B^T with B covering steps n/2 .. n-1.
    fill_lam(steps / 2);
    CMat b(dim, dim);
    for (int i = 0; i < dim; ++i) b(i, i) = lam[i];
    for (int k = steps / 2 + 1; k < steps; ++k) {
        b = matmul(r, b);
        fill_lam(k);
        scale_rows(b, lam);
    }
    const CMat p = matmul(matmul(b, r), b.transposed());

    CMat u = matmul(q, matmul(p, qt));
    scale_rows(u, e_half);
    scale_cols(u, e_half);
    return u;
}

}  // namespace

CMat compute_floquet_operator(const DrivenModel& model, const DriveEnvelope& env, int steps) {
    check_steps(steps);
    if (model.v_is_uniform_x) return propagator_walsh(model, env, steps);
    return propagator_dense(model, env, steps);
}

double verify_convergence(const DrivenModel& model, const DriveEnvelope& env, int steps) {
    const CMat coarse = compute_floquet_operator(model, env, steps);
    const CMat fine = compute_floquet_operator(model, env, 2 * steps);
    return max_abs_diff(coarse, fine);
}

ConvergedOperator compute_floquet_converged(const DrivenModel& model, const DriveEnvelope& env,
                                            double tol, int start_steps) {
    check_steps(start_steps);
    int steps = start_steps;
    CMat coarse = compute_floquet_operator(model, env, steps);
    double prev_residual = -1.0;
    int non_decreasing = 0;
    for (;;) {
        CMat fine = compute_floquet_operator(model, env, 2 * steps);
        const double residual = max_abs_diff(coarse, fine);
        if (residual < tol) return ConvergedOperator{std::move(fine), 2 * steps, residual};
        if (prev_residual >= 0.0 && residual >= prev_residual) {
            if (++non_decreasing >= 3)
                throw integrator_error("split-step residual stopped decreasing at steps=" +
                                       std::to_string(steps));
        } else {
            non_decreasing = 0;
        }
        prev_residual = residual;
        coarse = std::move(fine);
        steps *= 2;
        if (steps > (1 << 22))
            throw integrator_error("split-step failed to converge below tolerance");
    }
}

FloquetSpectrum diagonalize_symmetric_unitary(const CMat& u, bool check_residuals) {
    const int dim = u.rows;
    if (dim != u.cols) throw std::invalid_argument("diagonalize: matrix not square");

    FloquetSpectrum spec;
    spec.symmetry_residual = symmetry_residual(u);
    if (spec.symmetry_residual >= 1e-9)
        throw symmetry_error("matrix is not symmetric to 1e-9: residual " +
                             std::to_string(spec.symmetry_residual));

    // U = X + iY with X, Y real symmetric and commuting (from U^dag U = I).
    RMat x(dim, dim), y(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            x(i, j) = u(i, j).real();
            y(i, j) = u(i, j).imag();
        }

    EighResult ex = eigh(x);
    RMat& vecs = ex.vectors;

    // Within near-degenerate eigenvalue groups of X the eigenvectors are only
    // determined up to rotation, and reflected phase pairs (phi, 2pi - phi)
    // collide in cos while staying far apart in sin. Every group of X values
    // closer than cluster_tol is therefore re-diagonalized against Y; groups
    // that Y leaves unresolved (pi-reflections colliding in sin) get a second
    // refinement against X. The tolerances are generous on purpose: routing a
    // well-separated pair through the refinement is harmless, while missing a
    // colliding pair leaves dsyevd's O(eps/gap) vector mixing in place.
    const double cluster_tol = 1e-3;
    const double sub_tol = 1e-4;

    bool any_cluster = false;
    for (int e = 1; e < dim; ++e)
        if (ex.values[e] - ex.values[e - 1] < cluster_tol) any_cluster = true;
    if (any_cluster) {
        RMat yv = matmul(y, vecs);
        RMat xv = matmul(x, vecs);

        // Rotates columns [begin, end) of a matrix by the block rotation r.
        const auto rotate_cols = [&](RMat& m, const RMat& r, int begin, int end) {
            const int width = end - begin;
            RMat tmp(dim, width);
            for (int i = 0; i < dim; ++i)
                for (int b = 0; b < width; ++b) {
                    double s = 0.0;
                    for (int a = 0; a < width; ++a) s += m(i, begin + a) * r(a, b);
                    tmp(i, b) = s;
                }
            for (int i = 0; i < dim; ++i)
                for (int b = 0; b < width; ++b) m(i, begin + b) = tmp(i, b);
        };

        // Diagonalizes the projection of a matrix (given via mv = M * vecs)
        // onto columns [begin, end); co-rotates vecs, xv and yv so later
        // projections stay consistent. Returns the block eigenvalues.
        const auto rediag_block = [&](const RMat& mv, int begin, int end) {
            const int width = end - begin;
            RMat block(width, width);
            for (int a = 0; a < width; ++a)
                for (int b = 0; b < width; ++b) {
                    double s = 0.0;
                    for (int i = 0; i < dim; ++i) s += vecs(i, begin + a) * mv(i, begin + b);
                    block(a, b) = s;
                }
            for (int a = 0; a < width; ++a)
                for (int b = a + 1; b < width; ++b) {
                    const double m = 0.5 * (block(a, b) + block(b, a));
                    block(a, b) = m;
                    block(b, a) = m;
                }
            const EighResult sub = eigh(std::move(block));
            rotate_cols(vecs, sub.vectors, begin, end);
            rotate_cols(xv, sub.vectors, begin, end);
            rotate_cols(yv, sub.vectors, begin, end);
            return sub.values;
        };

        int begin = 0;
        while (begin < dim) {
            int end = begin + 1;
            while (end < dim && ex.values[end] - ex.values[end - 1] < cluster_tol) ++end;
            if (end - begin > 1) {
                const auto sin_vals = rediag_block(yv, begin, end);
                // Second level: X within sin-degenerate subgroups catches
                // pi-reflected pairs that collide in both cos and sin windows.
                int sb = 0;
                const int width = end - begin;
                while (sb < width) {
                    int se = sb + 1;
                    while (se < width && sin_vals[se] - sin_vals[se - 1] < sub_tol) ++se;
                    if (se - sb > 1) rediag_block(xv, begin + sb, begin + se);
                    sb = se;
                }
            }
            begin = end;
        }
    }

    // Commutation guard: the cluster re-diagonalization is only meaningful if
    // [X, Y] vanishes.
    if (any_cluster || check_residuals) {
        const RMat xy = matmul(x, y);
        const RMat yx = matmul(y, x);
        const double comm = max_abs_diff(xy, yx);
        if (comm > 1e-9)
            throw symmetry_error("X and Y do not commute: max residual " +
                                 std::to_string(comm));
    }

    // Per-column Rayleigh quotients give the (cos, sin) pair of each
    // eigenphase with quadratically small error, robust inside clusters.
    const RMat xv2 = matmul(x, vecs);
    const RMat yv2 = matmul(y, vecs);
    std::vector<double> phases(dim);
    for (int e = 0; e < dim; ++e) {
        double xe = 0.0, ye = 0.0;
        for (int i = 0; i < dim; ++i) {
            xe += vecs(i, e) * xv2(i, e);
            ye += vecs(i, e) * yv2(i, e);
        }
        double phi = std::atan2(-ye, xe);
        if (phi < 0.0) phi += 2.0 * M_PI;
        if (phi >= 2.0 * M_PI) phi -= 2.0 * M_PI;
        phases[e] = phi;
    }

    // Sort ascending by phase, permuting the eigenvector columns alongside.
    std::vector<int> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return phases[a] < phases[b]; });
    spec.phases.resize(dim);
    spec.eigvecs = RMat(dim, dim);
    for (int e = 0; e < dim; ++e) {
        spec.phases[e] = phases[order[e]];
        for (int i = 0; i < dim; ++i) spec.eigvecs(i, e) = vecs(i, order[e]);
    }
    spec.U = u;

    if (check_residuals) {
        spec.unitarity_residual = unitarity_residual(u);
        // Reconstruction sum_e e^{-i phi_e} |v_e><v_e| as V diag V^T.
        std::vector<cplx> eig(dim);
        for (int e = 0; e < dim; ++e) eig[e] = std::polar(1.0, -spec.phases[e]);
        CMat vd(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int e = 0; e < dim; ++e) vd(i, e) = spec.eigvecs(i, e) * eig[e];
        const CMat recon = matmul(vd, spec.eigvecs.transposed());
        spec.recon_residual = max_abs_diff(recon, u);

        // max_e | U v_e - e^{-i phi_e} v_e | (per-column max entry).
        const CMat uv = matmul(u, spec.eigvecs);
        double worst = 0.0;
        for (int e = 0; e < dim; ++e) {
            double col = 0.0;
            for (int i = 0; i < dim; ++i)
                col = std::max(col, std::abs(uv(i, e) - eig[e] * spec.eigvecs(i, e)));
            worst = std::max(worst, col);
        }
        spec.eigvec_residual = worst;
    }
    return spec;
}

std::vector<cplx> output_amplitudes(const FloquetSpectrum& spec, int z0, long long cycles) {
    if (cycles < 0) throw std::invalid_argument("output_amplitudes: M must be >= 0");
    const int dim = spec.eigvecs.rows;
    if (z0 < 0 || z0 >= dim) throw std::invalid_argument("output_amplitudes: z0 out of range");
    std::vector<cplx> w(dim);
    for (int e = 0; e < dim; ++e) {
        const double angle = std::fmod(static_cast<double>(cycles) * spec.phases[e], 2.0 * M_PI);
        w[e] = spec.eigvecs(z0, e) * std::polar(1.0, -angle);
    }
    return matvec(spec.eigvecs, w);
}

std::vector<double> output_probabilities(const FloquetSpectrum& spec, int z0, long long cycles) {
    const auto amp = output_amplitudes(spec, z0, cycles);
    std::vector<double> p(amp.size());
    for (size_t i = 0; i < amp.size(); ++i) p[i] = std::norm(amp[i]);
    return p;
}

CMat static_evolution(const RMat& hamiltonian, double t) {
    if (t < 0.0) throw std::invalid_argument("static_evolution: t must be >= 0");
    const EighResult ed = eigh(hamiltonian);
    const int dim = hamiltonian.rows;
    CMat vd(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int e = 0; e < dim; ++e)
            vd(i, e) = ed.vectors(i, e) * std::polar(1.0, -t * ed.values[e]);
    return matmul(vd, ed.vectors.transposed());
}

}  // namespace floq
