#include "floq/special.hpp"

#include <cmath>

#include "floq/errors.hpp"

namespace floq {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kCrossover = 9.0;

// K0(x) = -(log(x/2) + gamma) I0(x) + sum_{k>=1} H_k (x^2/4)^k / (k!)^2.
double k0_series(double x) {
    const double u = 0.25 * x * x;
    const double lg = std::log(0.5 * x) + kEulerGamma;
    double term = 1.0;   // u^k / (k!)^2
    double i0 = 1.0;
    double sum = 0.0;    // sum of H_k terms
    double harmonic = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= u / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        i0 += term;
        sum += term * harmonic;
        if (term * (harmonic + 1.0) < 1e-18 * (std::abs(sum) + i0)) break;
    }
    return -lg * i0 + sum;
}

// K0(x) ~ sqrt(pi/(2x)) e^{-x} [1 - 1/(8x) + 9/(2!(8x)^2) - ...], truncated at
// the smallest term.
double k0_asymptotic(double x) {
    const double inv8x = 1.0 / (8.0 * x);
    double term = 1.0;
    double sum = 1.0;
    double prev = 1.0;
    for (int k = 1; k < 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(odd * odd) * inv8x / k;
        if (std::abs(term) >= prev) break;  // divergent tail reached
        sum += term;
        prev = std::abs(term);
        if (prev < 1e-18) break;
    }
    return std::sqrt(M_PI / (2.0 * x)) * std::exp(-x) * sum;
}

// Term-by-term integral of the series:
// int_0^x K0 = sum_{k>=0} x^{2k+1}/(4^k (k!)^2 (2k+1)) *
//              (H_k - log(x/2) - gamma + 1/(2k+1)).
double k0_int_series(double x) {
    const double u = 0.25 * x * x;
    const double lg = std::log(0.5 * x) + kEulerGamma;
    double pow_term = x;  // x^{2k+1} / (4^k (k!)^2)
    double harmonic = 0.0;
    double sum = 0.0;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            pow_term *= u / (static_cast<double>(k) * k);
            harmonic += 1.0 / k;
        }
        const double w = pow_term / (2.0 * k + 1.0);
        sum += w * (harmonic - lg + 1.0 / (2.0 * k + 1.0));
        if (w * (harmonic + 2.0) < 1e-18 * std::abs(sum) && k > 2) break;
    }
    return sum;
}

// Adaptive Simpson for the exponentially decaying tail integral of K0.
double simpson_rec(double a, double b, double fa, double fm, double fb, double whole,
                   double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = bessel_k0(lm), frm = bessel_k0(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) < 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double k0_tail(double x) {
    // 46 e-foldings cover the truncation far below 1e-15 relative.
    const double b = x + 46.0;
    const double fa = bessel_k0(x), fb = bessel_k0(b), fm = bessel_k0(0.5 * (x + b));
    const double whole = (b - x) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(x, b, fa, fm, fb, whole, 1e-13, 48);
}

}  // namespace

double bessel_k0(double x) {
    if (!(x > 0.0)) throw domain_error("bessel_k0: argument must be > 0");
    if (x > 700.0) return 0.0;  // below double underflow of e^{-x}
    return (x < kCrossover) ? k0_series(x) : k0_asymptotic(x);
}

double bessel_k0_integral(double x) {
    if (x < 0.0) throw domain_error("bessel_k0_integral: argument must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < kCrossover) return k0_int_series(x);
    if (x > 700.0) return 0.5 * M_PI;
    return 0.5 * M_PI - k0_tail(x);
}

}  // namespace floq
