#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ppclab/sequences.hpp"

namespace ppclab {

enum class Norm { sup, euclid };

// N points in [0,1)^d, row-major.
struct TorusPointSet {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<double> coords;

  double at(std::size_t i, std::size_t l) const { return coords[i * dim + l]; }
  double& at(std::size_t i, std::size_t l) { return coords[i * dim + l]; }
  std::span<const double> row(std::size_t i) const { return {coords.data() + i * dim, dim}; }
};

TorusPointSet make_points(std::size_t dim, std::span<const double> flat_coords);

// Fractional part in [0,1), floor convention (negative inputs wrap).
double frac_unit(double y);

// {x*a} computed from the exact two-product x*a = p + e, so the fractional
// part stays accurate even when x*a is far above 2^52 and a plain frac(p)
// would quantize the low bits away.
double frac_product(double x, double a);

// Distance from y to the nearest integer; |y - round(y)| with ties at 1/2
// mapping to exactly 1/2.
double int_dist_1d(double y);

// min over integer shifts k of ||y + k||; separable per coordinate for both
// supported norms.  Sup-norm values lie in [0, 1/2].
double int_dist(std::span<const double> y, Norm norm);

// Point n, coordinate l = {x_n^{(l)} * alpha_l}.
TorusPointSet dilate_frac(const SequenceMatrix& x, std::span<const double> alpha);

}  // namespace ppclab
