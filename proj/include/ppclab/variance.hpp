#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ppclab/selberg.hpp"
#include "ppclab/sequences.hpp"

namespace ppclab {

struct VarianceEstimate {
  std::size_t n = 0;
  double r = 1.0;
  double s = 1.0;
  std::size_t samples = 0;
  double mean_stat = 0.0;
  double var_stat = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
};

// (1/N) sum_{m != n} F^sign_{K,s,N^{1/d}}((x_n - x_m) alpha) with degree
// K = ceil((rN)^{1/d}), evaluated through the power sums S_j = sum_n e(j .
// x_n alpha) so the cost is O(N (rN)) instead of O(N^2 (rN)^{1/d}).  For
// dim >= 2 the minus sign uses the inclusion-exclusion minorant.  N < 2
// returns 0 (no pairs).
double pair_statistic(const SequenceMatrix& x, std::span<const double> alpha, double s, double r,
                      SelbergSign sign);

struct MeanCalibration {
  double mc_mean = 0.0;
  double target = 0.0;  // N c_0^d
  double gap = 0.0;
  double mc_stderr = 0.0;
};

// Monte Carlo mean of the pair statistic over mu-sampled alpha versus the
// N c_0^d target; the gap is O(1/N) for well-spaced sequences.
MeanCalibration mean_calibration(const SequenceMatrix& x, double s, double r, std::size_t samples,
                                 std::uint64_t seed, SelbergSign sign = SelbergSign::plus);

// mean of squares around `center` with jackknife standard error
std::pair<double, double> variance_core(std::span<const double> stats, double center);

// Monte Carlo estimate of Var(H_N, mu): mean over mu-draws of
// (pair_statistic - (N-1) c_0^d)^2, centered with the analytic mean.
// Deterministic for fixed (seed, parameters) under any worker count.
VarianceEstimate variance_estimate(const SequenceMatrix& x, double s, double r,
                                   std::size_t samples, std::uint64_t seed);

}  // namespace ppclab
