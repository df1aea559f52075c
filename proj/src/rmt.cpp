#include "floq/rmt.hpp"

#include <cmath>
#include <limits>

#include "floq/eigen_sym.hpp"
#include "floq/errors.hpp"
#include "floq/floquet.hpp"
#include "floq/kernels.hpp"
#include "floq/rng.hpp"
#include "floq/special.hpp"
#include "floq/stats.hpp"

namespace floq {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

CMat sample_cue(int dim, uint64_t seed) {
    if (dim < 2) throw std::invalid_argument("sample_cue: N must be >= 2");
    Rng rng(seed);
    CMat g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
    return qr_unitary(std::move(g));
}

CMat sample_coe(int dim, uint64_t seed) {
    const CMat w = sample_cue(dim, seed);
    return matmul(w.transposed(), w);
}

RMat sample_goe(int dim, uint64_t seed) {
    if (dim < 2) throw std::invalid_argument("sample_goe: N must be >= 2");
    Rng rng(seed);
    RMat g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.normal();
    RMat a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = 0.5 * (g(i, j) + g(j, i));
    return a;
}

ReferenceDensity density_porter_thomas(double dim) {
    if (dim < 1.0) throw std::invalid_argument("density_porter_thomas: N must be >= 1");
    ReferenceDensity d;
    d.name = "porter_thomas";
    d.support_lo = 0.0;
    d.support_hi = kInf;
    d.pdf = [dim](double p) {
        if (p < 0.0) throw domain_error("porter_thomas: p must be >= 0");
        return dim * std::exp(-dim * p);
    };
    d.mass = [dim](double a, double b) {
        a = std::max(a, 0.0);
        if (b <= a) return 0.0;
        const double upper = std::isinf(b) ? 0.0 : std::exp(-dim * b);
        return std::exp(-dim * a) - upper;
    };
    return d;
}

ReferenceDensity density_bessel_d(double dim) {
    if (dim < 1.0) throw std::invalid_argument("density_bessel_d: N must be >= 1");
    ReferenceDensity d;
    d.name = "bessel_d";
    d.support_lo = 0.0;
    d.support_hi = kInf;
    d.pdf = [dim](double x) {
        if (x <= 0.0)
            throw domain_error("bessel_d: density has a logarithmic singularity at 0");
        return (2.0 * dim / M_PI) * bessel_k0(dim * x);
    };
    d.mass = [dim](double a, double b) {
        a = std::max(a, 0.0);
        if (b <= a) return 0.0;
        const double upper = std::isinf(b) ? 0.5 * M_PI : bessel_k0_integral(dim * b);
        return (2.0 / M_PI) * (upper - bessel_k0_integral(dim * a));
    };
    return d;
}

ReferenceDensity density_poisson_r() {
    // For uncorrelated levels the consecutive gaps are asymptotically i.i.d.
    // exponential, giving Pr(r) = 2/(1+r)^2 on [0,1]. This is the closed form
    // the i.i.d.-uniform-phase oracle selects (see the module tests).
    ReferenceDensity d;
    d.name = "poisson_r";
    d.support_lo = 0.0;
    d.support_hi = 1.0;
    d.pdf = [](double r) {
        if (r < 0.0 || r > 1.0) throw domain_error("poisson_r: r must be in [0,1]");
        const double q = 1.0 + r;
        return 2.0 / (q * q);
    };
    d.mass = [](double a, double b) {
        a = std::max(a, 0.0);
        b = std::min(b, 1.0);
        if (b <= a) return 0.0;
        return 2.0 * (1.0 / (1.0 + a) - 1.0 / (1.0 + b));
    };
    return d;
}

ReferenceDensity density_half_normal_c(double dim) {
    if (dim < 1.0) throw std::invalid_argument("density_half_normal_c: N must be >= 1");
    ReferenceDensity d;
    d.name = "half_normal_c";
    d.support_lo = 0.0;
    d.support_hi = kInf;
    const double s = std::sqrt(0.5 * dim);  // erf argument scale
    d.pdf = [dim](double c) {
        if (c < 0.0) throw domain_error("half_normal_c: |c| must be >= 0");
        return std::sqrt(2.0 * dim / M_PI) * std::exp(-0.5 * dim * c * c);
    };
    d.mass = [s](double a, double b) {
        a = std::max(a, 0.0);
        if (b <= a) return 0.0;
        const double upper = std::isinf(b) ? 1.0 : std::erf(s * b);
        return upper - std::erf(s * a);
    };
    return d;
}

Histogram reference_coe_r(int dim, int n_samples, uint64_t seed, int bins) {
    if (n_samples < 100)
        throw std::invalid_argument("reference_coe_r: need >= 100 samples");
    Histogram hist(0.0, 1.0, bins);
    std::vector<Histogram> parts(n_samples, Histogram(0.0, 1.0, bins));
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n_samples; ++s) {
        const CMat u = sample_coe(dim, seed_stream(seed, s));
        const FloquetSpectrum spec = diagonalize_symmetric_unitary(u, false);
        parts[s].add_all(r_statistics(spec.phases));
    }
    for (const auto& part : parts) hist.merge(part);
    return hist;
}

ReferenceDensity density_from_histogram(const Histogram& hist, const std::string& name) {
    ReferenceDensity d;
    d.name = name;
    // Out-of-range mass is kept as point masses at the infinities so that
    // l1_distance stays symmetric between two identically binned histograms.
    d.support_lo = -kInf;
    d.support_hi = kInf;
    const double lo = hist.lo, width = hist.bin_width();
    const int bins = hist.bins;
    const double total = hist.total ? static_cast<double>(hist.total) : 1.0;
    const double under = hist.underflow / total;
    const double over = hist.overflow / total;
    std::vector<double> dens(bins);
    for (int i = 0; i < bins; ++i) dens[i] = hist.density(i);
    d.pdf = [dens, lo, width, bins](double x) {
        const int b = static_cast<int>((x - lo) / width);
        if (b < 0 || b >= bins) return 0.0;
        return dens[b];
    };
    d.mass = [dens, lo, width, bins, under, over](double a, double b) {
        double m = 0.0;
        if (std::isinf(a) && a < 0.0) m += under;
        if (std::isinf(b) && b > 0.0) m += over;
        for (int i = 0; i < bins; ++i) {
            const double el = lo + i * width, er = el + width;
            const double ov = std::min(b, er) - std::max(a, el);
            if (ov > 0.0) m += dens[i] * ov;
        }
        return m;
    };
    return d;
}

}  // namespace floq
