#include "ppclab/expsum.hpp"

#include <cmath>

#include "ppclab/error.hpp"

namespace ppclab {

std::complex<double> exp_sum(std::span<const double> phases) {
  if (phases.empty()) fail(errc::domain_error, "exp_sum: empty interval");
  constexpr double two_pi = 6.283185307179586476925286766559;
  double re = 0.0, im = 0.0;
  for (double f : phases) {
    re += std::cos(two_pi * f);
    im += std::sin(two_pi * f);
  }
  return {re, im};
}

double vdc_bound(double lambda, double alpha, double interval_len) {
  if (!(lambda > 0.0)) fail(errc::domain_error, "vdc_bound: lambda must be positive");
  if (!(alpha >= 1.0)) fail(errc::domain_error, "vdc_bound: alpha must be >= 1");
  return alpha * interval_len * std::sqrt(lambda) + 1.0 / std::sqrt(lambda);
}

}  // namespace ppclab
