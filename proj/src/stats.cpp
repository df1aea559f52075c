#include "floq/stats.hpp"

#include <algorithm>
#include <cmath>

#include "floq/rng.hpp"

namespace floq {

void Histogram::add(double x) {
    ++total;
    if (x < lo) {
        ++underflow;
        return;
    }
    if (x > hi) {
        ++overflow;
        return;
    }
    int b = static_cast<int>((x - lo) / bin_width());
    if (b >= bins) b = bins - 1;  // x == hi lands in the last (closed) bin
    ++counts[b];
}

void Histogram::add_all(const std::vector<double>& xs) {
    for (double x : xs) add(x);
}

void Histogram::merge(const Histogram& other) {
    if (other.bins != bins || other.lo != lo || other.hi != hi)
        throw std::invalid_argument("histogram merge: binning mismatch");
    for (int i = 0; i < bins; ++i) counts[i] += other.counts[i];
    underflow += other.underflow;
    overflow += other.overflow;
    total += other.total;
}

std::vector<double> folded_phases(const std::vector<double>& phases, long long cycles) {
    if (cycles < 1) throw std::invalid_argument("folded_phases: M must be >= 1");
    std::vector<double> folded(phases.size());
    const double two_pi = 2.0 * M_PI;
    for (size_t i = 0; i < phases.size(); ++i) {
        double f = std::fmod(static_cast<double>(cycles) * phases[i], two_pi);
        if (f < 0.0) f += two_pi;
        folded[i] = f;
    }
    std::sort(folded.begin(), folded.end());
    return folded;
}

std::vector<double> r_statistics(const std::vector<double>& sorted_phases) {
    const size_t n = sorted_phases.size();
    if (n < 3) throw std::invalid_argument("r_statistics: need at least 3 phases");
    std::vector<double> gaps(n);
    for (size_t i = 0; i + 1 < n; ++i) gaps[i] = sorted_phases[i + 1] - sorted_phases[i];
    gaps[n - 1] = sorted_phases[0] + 2.0 * M_PI - sorted_phases[n - 1];  // wrap-around
    std::vector<double> r(n);
    for (size_t i = 0; i < n; ++i) {
        const double a = gaps[i];
        const double b = gaps[(i + 1) % n];
        const double mx = std::max(a, b);
        r[i] = (mx == 0.0) ? 1.0 : std::min(a, b) / mx;
    }
    return r;
}

std::vector<double> eigenstate_products(const FloquetSpectrum& spec, int z0) {
    const int dim = spec.eigvecs.rows;
    std::vector<double> d;
    d.reserve(static_cast<size_t>(dim) * dim);
    for (int e = 0; e < dim; ++e) {
        const double anchor = spec.eigvecs(z0, e);
        for (int z = 0; z < dim; ++z) d.push_back(std::abs(spec.eigvecs(z, e) * anchor));
    }
    return d;
}

double l1_distance(const Histogram& hist, const ReferenceDensity& ref) {
    if (hist.total == 0) throw std::invalid_argument("l1_distance: empty histogram");
    double l1 = 0.0;
    const double total = static_cast<double>(hist.total);
    for (int i = 0; i < hist.bins; ++i) {
        const double frac = hist.counts[i] / total;
        l1 += std::abs(frac - ref.mass(hist.edge(i), hist.edge(i + 1)));
    }
    l1 += std::abs(hist.overflow / total - ref.tail_mass(hist.hi));
    l1 += std::abs(hist.underflow / total - ref.mass(ref.support_lo, hist.lo));
    return l1;
}

double anti_concentration_fraction(const std::vector<double>& rescaled_p, double delta) {
    if (rescaled_p.empty()) return 0.0;
    size_t over = 0;
    for (double x : rescaled_p)
        if (x > delta) ++over;
    return static_cast<double>(over) / rescaled_p.size();
}

DrivenModel ModelSweep::build(uint64_t disorder_seed) const {
    DrivenModel m = (kind == ModelKind::ising)
                        ? build_ising(sites, W, J, F, disorder_seed)
                        : build_bose_hubbard(sites, n_particles, W, J, F, U_int, disorder_seed);
    m.params.omega = omega;
    return m;
}

std::vector<PtCurvePoint> pt_convergence_curve(const ModelSweep& sweep, uint64_t master_seed,
                                               const std::vector<long long>& cycle_schedule,
                                               int realizations, double convergence_tol) {
    if (realizations < 1) throw std::invalid_argument("pt_convergence_curve: realizations >= 1");
    const DriveEnvelope env = sweep.envelope();
    const size_t n_m = cycle_schedule.size();
    std::vector<std::vector<Histogram>> per_real(realizations);

#pragma omp parallel for schedule(dynamic)
    for (int rlz = 0; rlz < realizations; ++rlz) {
        const uint64_t seed = seed_stream(master_seed, rlz);
        const DrivenModel model = sweep.build(seed);
        const ConvergedOperator conv =
            compute_floquet_converged(model, env, convergence_tol);
        const FloquetSpectrum spec = diagonalize_symmetric_unitary(conv.U, false);
        const int z0 = random_initial_state(model.basis, seed_stream(seed, 1));
        const int dim = model.dim();
        std::vector<Histogram> hists(n_m, Histogram(0.0, kPtXMax, kPtBins));
        for (size_t mi = 0; mi < n_m; ++mi) {
            const auto p = output_probabilities(spec, z0, cycle_schedule[mi]);
            for (double pz : p) hists[mi].add(dim * pz);
        }
        per_real[rlz] = std::move(hists);
    }

    // Deterministic pooled reduction in realization order.
    const ReferenceDensity pt = density_porter_thomas(1.0);
    std::vector<PtCurvePoint> curve(n_m);
    for (size_t mi = 0; mi < n_m; ++mi) {
        Histogram pooled(0.0, kPtXMax, kPtBins);
        for (int rlz = 0; rlz < realizations; ++rlz) pooled.merge(per_real[rlz][mi]);
        curve[mi] = PtCurvePoint{cycle_schedule[mi], l1_distance(pooled, pt)};
    }
    return curve;
}

}  // namespace floq
