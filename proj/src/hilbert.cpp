#include "floq/hilbert.hpp"

#include <algorithm>
#include <string>

#include "floq/errors.hpp"

namespace floq {

namespace {
constexpr int kMaxSpinSites = 14;
constexpr uint64_t kMaxBoseDim = 50000;
}  // namespace

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact: product of i consecutive ints divisible by i!
    }
    return r;
}

int FockBasis::index_of(const std::vector<uint8_t>& state) const {
    if (static_cast<int>(state.size()) != sites)
        throw std::invalid_argument("index_of: tuple length mismatch");
    if (kind == BasisKind::spin) {
        int idx = 0;
        for (uint8_t z : state) {
            if (z > 1) throw std::invalid_argument("index_of: spin occupation > 1");
            idx = (idx << 1) | z;
        }
        return idx;
    }
    const auto it = std::lower_bound(states.begin(), states.end(), state);
    if (it == states.end() || *it != state)
        throw std::invalid_argument("index_of: state not in basis");
    return static_cast<int>(it - states.begin());
}

FockBasis enumerate_spin_basis(int sites) {
    if (sites < 1 || sites > kMaxSpinSites)
        throw size_limit_error("spin basis: L must be in [1, " +
                               std::to_string(kMaxSpinSites) + "], got " +
                               std::to_string(sites));
    FockBasis b;
    b.kind = BasisKind::spin;
    b.sites = sites;
    b.local_dim = 2;
    const int dim = 1 << sites;
    b.states.reserve(dim);
    for (int v = 0; v < dim; ++v) {
        std::vector<uint8_t> s(sites);
        for (int l = 0; l < sites; ++l) s[l] = (v >> (sites - 1 - l)) & 1;
        b.states.push_back(std::move(s));
    }
    return b;
}

FockBasis enumerate_bose_basis(int sites, int n_particles) {
    if (sites < 1) throw size_limit_error("bose basis: L must be positive");
    if (n_particles < 0 || n_particles > 255)
        throw size_limit_error("bose basis: n must be in [0, 255]");
    const uint64_t dim = binomial(n_particles + sites - 1, n_particles);
    if (dim > kMaxBoseDim)
        throw size_limit_error("bose basis: dimension " + std::to_string(dim) +
                               " exceeds guard " + std::to_string(kMaxBoseDim));
    FockBasis b;
    b.kind = BasisKind::boson;
    b.sites = sites;
    b.local_dim = n_particles + 1;
    b.n_particles = n_particles;
    b.states.reserve(dim);

    // Lexicographic enumeration starting from (0,...,0,n). To advance: take the
    // rightmost position before the last whose tail still holds particles,
    // increment it, and drop the rest of the tail onto the last site.
    std::vector<uint8_t> s(sites, 0);
    s[sites - 1] = static_cast<uint8_t>(n_particles);
    for (;;) {
        b.states.push_back(s);
        int i = sites - 2;
        int tail = (sites >= 1) ? s[sites - 1] : 0;
        while (i >= 0 && tail == 0) {
            tail += s[i + 1];
            if (tail > 0) break;
            --i;
        }
        // Recompute the full tail sum to the right of i.
        if (i < 0) break;
        tail = 0;
        for (int j = i + 1; j < sites; ++j) {
            tail += s[j];
            s[j] = 0;
        }
        if (tail == 0) break;
        s[i] += 1;
        s[sites - 1] = static_cast<uint8_t>(tail - 1);
    }
    return b;
}

}  // namespace floq
