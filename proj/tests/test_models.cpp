#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "floq/models.hpp"
#include "floq/rng.hpp"

using namespace floq;

TEST_CASE("ising H0 sign algebra") {
    // L=2, W=0, J=1: configuration (0,0) has one bond with both spins +1.
    const DrivenModel m = build_ising(2, 0.0, 1.0, 2.5, 7);
    CHECK(m.H0_diag[0] == doctest::Approx(1.0));   // (0,0)
    CHECK(m.H0_diag[1] == doctest::Approx(-1.0));  // (0,1)
    CHECK(m.H0_diag[2] == doctest::Approx(-1.0));  // (1,0)
    CHECK(m.H0_diag[3] == doctest::Approx(1.0));   // (1,1)
}

TEST_CASE("ising drive matrix is the single-flip rule") {
    const DrivenModel m = build_ising(2, 0.0, 1.0, 2.5, 7);
    const int i00 = 0, i01 = 1, i10 = 2, i11 = 3;
    CHECK(m.V(i00, i01) == 2.5);
    CHECK(m.V(i00, i10) == 2.5);
    CHECK(m.V(i00, i11) == 0.0);
    CHECK(m.V(i00, i00) == 0.0);
    // Exactly L nonzero entries per row, each equal to F.
    const DrivenModel big = build_ising(6, 1.0, 1.0, 2.5, 3);
    for (int i = 0; i < big.dim(); ++i) {
        int nonzero = 0;
        for (int j = 0; j < big.dim(); ++j)
            if (big.V(i, j) != 0.0) {
                ++nonzero;
                CHECK(big.V(i, j) == 2.5);
            }
        CHECK(nonzero == 6);
    }
}

TEST_CASE("ising disorder entries live in {0, W}") {
    const DrivenModel m = build_ising(10, 1.0, 1.0, 2.5, 42);
    int zeros = 0, ws = 0;
    for (double mu : m.mu) {
        if (mu == 0.0) ++zeros;
        else if (mu == 1.0) ++ws;
    }
    CHECK(zeros + ws == 10);
    // Same seed reproduces the realization; different seed differs somewhere.
    const DrivenModel m2 = build_ising(10, 1.0, 1.0, 2.5, 42);
    CHECK(m.mu == m2.mu);
}

TEST_CASE("bose hubbard drive and interaction") {
    const DrivenModel m = build_bose_hubbard(2, 2, 0.0, 1.0, 1.5, 1.0, 5);
    // Basis: (0,2), (1,1), (2,0)
    const int i02 = 0, i11 = 1, i20 = 2;
    CHECK(m.V(i20, i11) == doctest::Approx(-1.5 * std::sqrt(2.0)));
    CHECK(m.V(i11, i20) == m.V(i20, i11));
    CHECK(m.V(i02, i20) == 0.0);
    // H0 for (2,0) with U=1: U/2 * 2 * 1 = 1.
    CHECK(m.H0_diag[i20] == doctest::Approx(1.0));
    CHECK(m.H0_diag[i11] == doctest::Approx(0.0));

    const DrivenModel free = build_bose_hubbard(3, 2, 0.0, 1.0, 1.0, 0.0, 5);
    for (double e : free.H0_diag) CHECK(e == 0.0);
}

TEST_CASE("V is exactly symmetric and particle conserving") {
    const DrivenModel m = build_bose_hubbard(4, 2, 1.0, 1.0, 2.5, 1.0, 11);
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            CHECK(m.V(i, j) == m.V(j, i));  // bit-identical transpose
            if (m.V(i, j) != 0.0) {
                int ni = 0, nj = 0;
                for (uint8_t n : m.basis.states[i]) ni += n;
                for (uint8_t n : m.basis.states[j]) nj += n;
                CHECK(ni == nj);
            }
        }
}

TEST_CASE("drive envelope") {
    const DriveEnvelope env{8.0};
    const double period = env.period();
    CHECK(f_envelope(0.0, env) == doctest::Approx(0.0));
    CHECK(f_envelope(0.5 * period, env) == doctest::Approx(1.0));
    CHECK(f_envelope(0.25 * period, env) == doctest::Approx(0.5));
    for (double t : {0.05, 0.11, 0.31}) {
        CHECK(f_envelope(period - t, env) == doctest::Approx(f_envelope(t, env)).epsilon(1e-12));
        CHECK(f_envelope(t, env) >= 0.0);
        CHECK(f_envelope(t, env) <= 1.0);
    }
}

TEST_CASE("random initial state is deterministic and uniform") {
    const FockBasis basis = enumerate_spin_basis(4);  // 16 states
    CHECK(random_initial_state(basis, 123) == random_initial_state(basis, 123));

    const FockBasis one = enumerate_bose_basis(3, 0);
    CHECK(random_initial_state(one, 9) == 0);

    // Chi-square style check: 1e4 draws, every count within 4 sigma of the
    // multinomial expectation.
    const int n_draws = 10000;
    std::vector<int> counts(16, 0);
    for (int k = 0; k < n_draws; ++k) ++counts[random_initial_state(basis, seed_stream(77, k))];
    const double expect = n_draws / 16.0;
    const double sigma = std::sqrt(n_draws * (1.0 / 16.0) * (15.0 / 16.0));
    for (int c : counts) CHECK(std::abs(c - expect) < 4.0 * sigma);
}

TEST_CASE("H(t) = H0 + f(t) V is real symmetric at every t") {
    const DrivenModel m = build_ising(4, 1.0, 1.0, 2.5, 2);
    const DriveEnvelope env{8.0};
    for (double t : {0.1, 0.3, 0.7}) {
        const double f = f_envelope(t, env);
        for (int i = 0; i < m.dim(); ++i)
            for (int j = i + 1; j < m.dim(); ++j)
                CHECK(f * m.V(i, j) == f * m.V(j, i));
    }
}
