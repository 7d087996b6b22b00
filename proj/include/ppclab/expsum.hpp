#pragma once

#include <complex>
#include <span>

namespace ppclab {

// sum over the table of e(f(n)) = exp(2 pi i f(n))
std::complex<double> exp_sum(std::span<const double> phases);

// van der Corput second-derivative bound alpha |I| lambda^{1/2} + lambda^{-1/2}
double vdc_bound(double lambda, double alpha, double interval_len);

}  // namespace ppclab
