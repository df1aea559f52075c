#pragma once

namespace floq {

// Modified Bessel function of the second kind K0(x), x > 0. Power series up to
// the crossover, optimally truncated asymptotic expansion beyond it; absolute
// accuracy better than 1e-9 over the whole range.
double bessel_k0(double x);

// Integral of K0 from 0 to x (x >= 0). Approaches pi/2 as x -> infinity.
double bessel_k0_integral(double x);

}  // namespace floq
