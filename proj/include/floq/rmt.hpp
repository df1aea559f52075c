#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "floq/mat.hpp"

namespace floq {

struct Histogram;  // stats.hpp

// Closed-form (or tabulated) reference density with exact bin-mass integrals,
// the form every histogram comparison consumes.
struct ReferenceDensity {
    std::string name;
    double support_lo = 0.0;
    double support_hi = 0.0;  // +inf allowed
    std::function<double(double)> pdf;
    // Exact integral of the density over [a, b] intersected with the support.
    std::function<double(double, double)> mass;

    double tail_mass(double a) const { return mass(a, support_hi); }
};

// Haar-distributed unitary: complex Ginibre, QR, R-diagonal phases divided out.
CMat sample_cue(int dim, uint64_t seed);

// COE sample W^T W with W from the CUE; symmetric unitary.
CMat sample_coe(int dim, uint64_t seed);

// GOE sample (G + G^T)/2 with i.i.d. standard normal entries.
RMat sample_goe(int dim, uint64_t seed);

// Porter-Thomas density N e^{-N p} on p >= 0; with N=1 this is the density of
// the rescaled variable x = N p.
ReferenceDensity density_porter_thomas(double dim);

// Eigenstate-product magnitude density (2N/pi) K0(N d) on d > 0.
ReferenceDensity density_bessel_d(double dim);

// Level-spacing ratio density for uncorrelated phases, 2/(1+r)^2 on [0,1].
ReferenceDensity density_poisson_r();

// Half-normal density of |<z|E>| eigenvector components, sigma^2 = 1/N.
ReferenceDensity density_half_normal_c(double dim);

// Empirical COE r-statistic reference: pooled histogram over n_samples COE
// matrices of the given dimension (no closed form is assumed).
Histogram reference_coe_r(int dim, int n_samples, uint64_t seed, int bins = 40);

// Piecewise-constant density built from a histogram (for empirical references).
ReferenceDensity density_from_histogram(const Histogram& hist, const std::string& name);

}  // namespace floq
