#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "floq/errors.hpp"
#include "floq/floquet.hpp"
#include "floq/kernels.hpp"
#include "floq/rmt.hpp"
#include "floq/rng.hpp"

using namespace floq;

namespace {

const DriveEnvelope kEnv{8.0};

// Test-side reference propagator: plain time-ordered product of split-step
// factors, each factor built from scratch with the naive kernels.
CMat reference_propagator(const DrivenModel& m, const DriveEnvelope& env, int steps) {
    const int dim = m.dim();
    const double dt = env.period() / steps;
    const EighResult vd = eigh(m.V);
    CMat u = CMat::identity(dim);
    for (int k = 0; k < steps; ++k) {
        const double f = f_envelope((k + 0.5) * dt, env);
        CMat h_half(dim, dim);
        for (int i = 0; i < dim; ++i) h_half(i, i) = std::polar(1.0, -0.5 * dt * m.H0_diag[i]);
        CMat vexp(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                cplx s = 0.0;
                for (int e = 0; e < dim; ++e)
                    s += vd.vectors(i, e) * std::polar(1.0, -dt * f * vd.values[e]) *
                         vd.vectors(j, e);
                vexp(i, j) = s;
            }
        const CMat step = ref::matmul_naive(h_half, ref::matmul_naive(vexp, h_half));
        u = ref::matmul_naive(step, u);
    }
    return u;
}

}  // namespace

TEST_CASE("both propagator routes match the plain time-ordered product") {
    const DrivenModel m = build_ising(3, 1.0, 1.0, 2.5, 11);
    const CMat oracle = reference_propagator(m, kEnv, 16);
    const CMat fast = compute_floquet_operator(m, kEnv, 16);
    CHECK(max_abs_diff(fast, oracle) < 1e-12);

    // Dense route on the same model (drop the uniform-X tag).
    DrivenModel dense = m;
    dense.v_is_uniform_x = false;
    const CMat generic = compute_floquet_operator(dense, kEnv, 16);
    CHECK(max_abs_diff(generic, oracle) < 1e-12);

    const DrivenModel bh = build_bose_hubbard(3, 2, 1.0, 1.0, 2.5, 1.0, 12);
    const CMat bh_oracle = reference_propagator(bh, kEnv, 16);
    CHECK(max_abs_diff(compute_floquet_operator(bh, kEnv, 16), bh_oracle) < 1e-12);
}

TEST_CASE("zero drive evolves diagonally") {
    const DrivenModel m = build_ising(4, 1.0, 1.0, 0.0, 3);
    const CMat u = compute_floquet_operator(m, kEnv, 64);
    const double period = kEnv.period();
    double err = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            const cplx expect =
                (i == j) ? std::polar(1.0, -period * m.H0_diag[i]) : cplx(0.0, 0.0);
            err = std::max(err, std::abs(u(i, j) - expect));
        }
    CHECK(err < 1e-12);
    CHECK(verify_convergence(m, kEnv, 16) < 1e-12);

    // Diagonal evolution keeps the initial state: p_M(z0) = 1 for all M.
    const FloquetSpectrum spec = diagonalize_symmetric_unitary(u);
    const auto p = output_probabilities(spec, 5, 40);
    CHECK(p[5] == doctest::Approx(1.0));
}

TEST_CASE("commuting single-spin drive has the closed form") {
    // H(t) = f(t) F X for one spin: all H(t) commute and int_0^T f = T/2, so
    // U = exp(-i (F T/2) X). The basis guard needs L >= 2, so build the
    // model by hand.
    DrivenModel m;
    m.kind = ModelKind::ising;
    m.basis = enumerate_spin_basis(1);
    m.H0_diag = {0.0, 0.0};
    m.params = ModelParams{1.0, 0.0, 1.7, 0.0, kEnv.omega};
    m.V = RMat(2, 2);
    m.V(0, 1) = m.V(1, 0) = 1.7;
    m.mu = {0.0};
    m.v_is_uniform_x = true;

    const double theta = 1.7 * kEnv.period() / 2.0;
    const CMat u = compute_floquet_operator(m, kEnv, 256);
    CHECK(std::abs(u(0, 0) - cplx(std::cos(theta), 0.0)) < 1e-10);
    CHECK(std::abs(u(0, 1) - cplx(0.0, -std::sin(theta))) < 1e-10);
    CHECK(std::abs(u(1, 0) - cplx(0.0, -std::sin(theta))) < 1e-10);
    CHECK(std::abs(u(1, 1) - cplx(std::cos(theta), 0.0)) < 1e-10);
    // Residual here is pure envelope quadrature, and the midpoint rule is
    // exact for the cosine envelope over a full period: machine level at any
    // resolution.
    CHECK(verify_convergence(m, kEnv, 16) < 1e-12);
    CHECK(verify_convergence(m, kEnv, 64) < 1e-12);
}

TEST_CASE("self-convergence at L=6 paper parameters") {
    const DrivenModel m = build_ising(6, 1.0, 1.0, 2.5, 12345);
    const CMat u256 = compute_floquet_operator(m, kEnv, 256);
    const CMat u512 = compute_floquet_operator(m, kEnv, 512);
    CHECK(max_abs_diff(u256, u512) < 1e-5);  // second-order decay, see ladder below

    // Monotone decreasing residual sequence over doublings.
    double prev = 1e9;
    for (int steps : {64, 128, 256, 512}) {
        const double r = verify_convergence(m, kEnv, steps);
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("converged operator meets the hygiene bars") {
    const DrivenModel m = build_ising(5, 1.0, 1.0, 2.5, 77);
    const ConvergedOperator conv = compute_floquet_converged(m, kEnv, 1e-8);
    CHECK(conv.residual < 1e-8);
    CHECK(unitarity_residual(conv.U) < 1e-9);
    CHECK(symmetry_residual(conv.U) < 1e-9);

    const FloquetSpectrum spec = diagonalize_symmetric_unitary(conv.U);
    CHECK(spec.recon_residual < 1e-8);
    CHECK(spec.eigvec_residual < 1e-8);
    // Phases ascending in [0, 2 pi).
    for (size_t e = 0; e + 1 < spec.phases.size(); ++e)
        CHECK(spec.phases[e] <= spec.phases[e + 1]);
    CHECK(spec.phases.front() >= 0.0);
    CHECK(spec.phases.back() < 2.0 * M_PI);
    // Eigenvector columns orthonormal.
    const RMat gram = matmul(spec.eigvecs.transposed(), spec.eigvecs);
    double err = 0.0;
    for (int i = 0; i < gram.rows; ++i)
        for (int j = 0; j < gram.cols; ++j)
            err = std::max(err, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));
    CHECK(err < 1e-9);
}

TEST_CASE("diagonalize_symmetric_unitary on exact cases") {
    const CMat eye = CMat::identity(4);
    const FloquetSpectrum s1 = diagonalize_symmetric_unitary(eye);
    for (double phi : s1.phases) CHECK(phi == 0.0);
    double err = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            err = std::max(err, std::abs(s1.eigvecs(i, j) - (i == j ? 1.0 : 0.0)));
    CHECK(s1.recon_residual < 1e-15);

    CMat mixed = CMat::identity(2);
    mixed(1, 1) = -1.0;
    const FloquetSpectrum s2 = diagonalize_symmetric_unitary(mixed);
    CHECK(s2.phases[0] == doctest::Approx(0.0));
    CHECK(s2.phases[1] == doctest::Approx(M_PI));

    CMat skew(2, 2);
    skew(0, 1) = 1.0;  // not symmetric enough once perturbed
    skew(1, 0) = 1.0 + 1e-6;
    CHECK_THROWS_AS(diagonalize_symmetric_unitary(skew), symmetry_error);
}

TEST_CASE("COE reconstruction identity at N=64") {
    const CMat u = sample_coe(64, 2024);
    const FloquetSpectrum spec = diagonalize_symmetric_unitary(u);
    CHECK(spec.recon_residual < 1e-8);
    CHECK(spec.eigvec_residual < 1e-8);
}

TEST_CASE("spectral evolution equals direct repeated multiplication (L=6, M=3)") {
    const DrivenModel m = build_ising(6, 1.0, 1.0, 2.5, 9);
    const ConvergedOperator conv = compute_floquet_converged(m, kEnv, 1e-8);
    const FloquetSpectrum spec = diagonalize_symmetric_unitary(conv.U);
    const int z0 = 17;
    const auto amp = output_amplitudes(spec, z0, 3);

    CMat state(m.dim(), 1);
    state(z0, 0) = 1.0;
    for (int k = 0; k < 3; ++k) state = matmul(conv.U, state);
    double err = 0.0;
    for (int z = 0; z < m.dim(); ++z) err = std::max(err, std::abs(amp[z] - state(z, 0)));
    CHECK(err < 1e-8);
}

TEST_CASE("output probabilities: M=0 delta, normalization, sign-flip invariance") {
    const DrivenModel m = build_ising(4, 1.0, 1.0, 2.5, 5);
    const ConvergedOperator conv = compute_floquet_converged(m, kEnv, 1e-8);
    FloquetSpectrum spec = diagonalize_symmetric_unitary(conv.U);

    const auto p0 = output_probabilities(spec, 3, 0);
    CHECK(p0[3] == doctest::Approx(1.0));
    double off = 0.0;
    for (int z = 0; z < m.dim(); ++z)
        if (z != 3) off = std::max(off, p0[z]);
    CHECK(off < 1e-18);

    for (long long cycles : {1LL, 7LL, 100LL}) {
        const auto p = output_probabilities(spec, 3, cycles);
        double total = 0.0;
        for (double v : p) total += v;
        CHECK(std::abs(total - 1.0) < 1e-9);
    }

    // d and p are invariant under eigenvector column sign flips.
    const auto p_before = output_probabilities(spec, 3, 11);
    Rng rng(99);
    for (int e = 0; e < m.dim(); ++e)
        if (rng.coin())
            for (int i = 0; i < m.dim(); ++i) spec.eigvecs(i, e) = -spec.eigvecs(i, e);
    const auto p_after = output_probabilities(spec, 3, 11);
    double diff = 0.0;
    for (int z = 0; z < m.dim(); ++z) diff = std::max(diff, std::abs(p_before[z] - p_after[z]));
    CHECK(diff < 1e-12);
}

TEST_CASE("static evolution") {
    RMat h(3, 3);
    h(0, 0) = 0.5;
    h(1, 1) = -1.0;
    h(2, 2) = 2.0;
    const CMat u0 = static_evolution(h, 0.0);
    CHECK(max_abs_diff(u0, CMat::identity(3)) < 1e-14);
    const CMat upi = static_evolution(h, M_PI);
    for (int k = 0; k < 3; ++k)
        CHECK(std::abs(upi(k, k) - std::polar(1.0, -M_PI * h(k, k))) < 1e-13);

    // Dense symmetric case vs 12th-order Taylor at t = 0.1.
    const DrivenModel m = build_ising(4, 0.5, 1.0, 1.0, 21);
    RMat dense = m.V;
    for (auto& v : dense.data) v *= 0.5;
    for (int i = 0; i < m.dim(); ++i) dense(i, i) += m.H0_diag[i];
    const double t = 0.1;
    CMat taylor = CMat::identity(m.dim());
    CMat term = CMat::identity(m.dim());
    for (int k = 1; k <= 12; ++k) {
        term = matmul(term, dense);
        const cplx coef = std::pow(cplx(0.0, -t), k) / std::tgamma(k + 1.0);
        for (size_t idx = 0; idx < term.data.size(); ++idx)
            taylor.data[idx] += coef * term.data[idx];
    }
    CHECK(max_abs_diff(static_evolution(dense, t), taylor) < 1e-10);
}

TEST_CASE("steps guard") {
    const DrivenModel m = build_ising(3, 1.0, 1.0, 2.5, 1);
    CHECK_THROWS(compute_floquet_operator(m, kEnv, 8));
    CHECK_THROWS(compute_floquet_operator(m, kEnv, 17));
}
