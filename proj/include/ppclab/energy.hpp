#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ppclab/sequences.hpp"

namespace ppclab {

struct EnergyReport {
  std::vector<std::size_t> ns;
  std::vector<std::uint64_t> counts;
  std::vector<double> gamma;
  std::vector<std::size_t> subset;  // 0-based column indices
  double slope = 0.0;
  double slope_stderr = 0.0;
};

// #{ n in [1,N]^4 : |x_{n1}+x_{n2}-x_{n3}-x_{n4}| < gamma }, strict, exact.
// Sorted pairwise sums with a sliding window: O(N^2 log N) plus the window
// volume for the joint variants.  gamma must lie in (0,1].
std::uint64_t energy_1d(std::span<const double> x, double gamma, std::size_t n);

// Joint variant: all |x^{(l)} sums| < gamma_l for l in subset must hold
// simultaneously.  gamma is indexed by column (size = x.dim); the window
// runs over the first constrained coordinate, the rest are filtered.
std::uint64_t joint_energy(const SequenceMatrix& x, std::span<const double> gamma,
                           std::span<const std::size_t> subset, std::size_t n);

// Same predicate over all columns, indices restricted to [n, min(2n, rows)]
// (1-based, inclusive).  gamma entries only need to be positive here.
std::uint64_t block_energy(const SequenceMatrix& x, std::span<const double> gamma, std::size_t n);

// Dyadic dilation ranges 2^{u_l-1} <= j_l < 2^{u_l}.
struct DyadicBlock {
  std::vector<std::uint32_t> u;
};

// Optional restriction of the (j,t) enumeration: `ratio` keeps tuples with
// j_1/t_1 = ... = j_d'/t_d', `equal` forces j = t.
enum class DilationLock { none, ratio, equal };

// sum over j,t in the block and 1<=m,n<=M of 1{ ||j z_m - t z_n||_inf < 1 },
// z given row-major M x d'.
std::uint64_t dilated_pair_count(std::span<const double> z, std::size_t m, std::size_t dim,
                                 const DyadicBlock& block, DilationLock lock = DilationLock::none);

// multiset { |x_n^{D'} - x_m^{D'}| : n != m }, row-major (N^2-N) x |D'|
std::vector<double> abs_diff_set(const SequenceMatrix& x, std::span<const std::size_t> subset);

// Least-squares slope of log(count) against log(N) with its standard error.
// Needs >= 3 distinct N values and positive counts.
std::pair<double, double> fit_exponent(std::span<const std::size_t> ns,
                                       std::span<const std::uint64_t> counts);

// Watt diagnostic: V = exact solution count of the inequality system
// |sum_m (omega_k(u_m) - omega_k(v_m))| < delta_k over tuples in A^{2M},
// scaled_w = delta_1...delta_K * integral of |T|^{2M} over the box
// [-D_k, D_k] with 2 delta_k D_k = 1, by midpoint quadrature with resolution
// doubling (relative settle < 1%, else a quadrature error is raised).
struct WattResult {
  std::uint64_t v = 0;
  double scaled_w = 0.0;
  double ratio = 0.0;
};

WattResult watt_ratio(std::span<const long> a, const std::vector<std::vector<double>>& omega,
                      std::span<const double> delta, std::size_t m, std::size_t initial_res = 64);

}  // namespace ppclab
