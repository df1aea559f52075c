#pragma once

#include <cstdint>
#include <vector>

#include "floq/floquet.hpp"
#include "floq/models.hpp"
#include "floq/rmt.hpp"

namespace floq {

// Fixed-width binning with explicit under/overflow counters; density means
// counts / (total * bin_width).
struct Histogram {
    double lo = 0.0;
    double hi = 1.0;
    int bins = 0;
    std::vector<uint64_t> counts;
    uint64_t underflow = 0;
    uint64_t overflow = 0;
    uint64_t total = 0;

    Histogram() = default;
    Histogram(double lo_, double hi_, int bins_)
        : lo(lo_), hi(hi_), bins(bins_), counts(bins_, 0) {}

    double bin_width() const { return (hi - lo) / bins; }
    double edge(int i) const { return lo + (hi - lo) * i / bins; }

    void add(double x);
    void add_all(const std::vector<double>& xs);
    void merge(const Histogram& other);

    double density(int i) const {
        return total == 0 ? 0.0 : static_cast<double>(counts[i]) / (total * bin_width());
    }
    double fraction(int i) const {
        return total == 0 ? 0.0 : static_cast<double>(counts[i]) / total;
    }
};

// (M * phi) mod 2pi, sorted ascending.
std::vector<double> folded_phases(const std::vector<double>& phases, long long cycles);

// Circular consecutive-gap ratios min/max including the wrap-around gap:
// N phases give N gaps and N ratios. Exact zero gap pairs: r = 1 if both
// vanish, else 0.
std::vector<double> r_statistics(const std::vector<double>& sorted_phases);

// |<z|E_e><E_e|z0>| for every (e, z); length N^2.
std::vector<double> eigenstate_products(const FloquetSpectrum& spec, int z0);

// l1 distance between a histogram and a reference density: sum over bins of
// |empirical fraction - exact reference mass| plus the matching out-of-range
// terms.
double l1_distance(const Histogram& hist, const ReferenceDensity& ref);

// Fraction of rescaled probabilities strictly above delta.
double anti_concentration_fraction(const std::vector<double>& rescaled_p, double delta);

struct ModelSweep {
    ModelKind kind = ModelKind::ising;
    int sites = 8;
    int n_particles = 0;  // boson kind
    double W = 1.0;
    double J = 1.0;
    double F = 2.5;
    double U_int = 1.0;
    double omega = 8.0;

    DrivenModel build(uint64_t disorder_seed) const;
    DriveEnvelope envelope() const { return DriveEnvelope{omega}; }
};

struct PtCurvePoint {
    long long cycles;
    double l1_to_pt;
};

// l1 distance to Porter-Thomas of the pooled rescaled output distribution as a
// function of the cycle count. Pools N*p over all z and all disorder
// realizations; binning fixed at 48 bins on [0, 12].
std::vector<PtCurvePoint> pt_convergence_curve(const ModelSweep& sweep, uint64_t master_seed,
                                               const std::vector<long long>& cycle_schedule,
                                               int realizations,
                                               double convergence_tol = 1e-8);

constexpr int kPtBins = 48;
constexpr double kPtXMax = 12.0;

}  // namespace floq
