#include "ppclab/torus.hpp"

#include <cmath>

#include "ppclab/error.hpp"

namespace ppclab {

TorusPointSet make_points(std::size_t dim, std::span<const double> flat_coords) {
  if (dim < 1) fail(errc::domain_error, "make_points: dimension must be >= 1");
  if (flat_coords.size() % dim != 0)
    fail(errc::domain_error, "make_points: coordinate count not a multiple of dim");
  TorusPointSet pts;
  pts.dim = dim;
  pts.n = flat_coords.size() / dim;
  pts.coords.assign(flat_coords.begin(), flat_coords.end());
  for (double c : pts.coords)
    if (!(c >= 0.0 && c < 1.0)) fail(errc::domain_error, "make_points: coordinate outside [0,1)");
  return pts;
}

double frac_unit(double y) {
  double f = y - std::floor(y);
  if (f >= 1.0) f -= 1.0;  // rounding can push y - floor(y) to 1.0 for tiny negative y
  return f;
}

double frac_product(double x, double a) {
  const double p = x * a;
  const double e = std::fma(x, a, -p);  // x*a == p + e exactly
  double f = (p - std::floor(p)) + e;
  return frac_unit(f);
}

double int_dist_1d(double y) { return std::fabs(std::remainder(y, 1.0)); }

double int_dist(std::span<const double> y, Norm norm) {
  if (y.empty()) fail(errc::domain_error, "int_dist: dimension must be >= 1");
  for (double v : y)
    if (!std::isfinite(v)) fail(errc::domain_error, "int_dist: non-finite coordinate");
  if (norm == Norm::sup) {
    double m = 0.0;
    for (double v : y) m = std::max(m, int_dist_1d(v));
    return m;
  }
  double ss = 0.0;
  for (double v : y) {
    const double d = int_dist_1d(v);
    ss += d * d;
  }
  return std::sqrt(ss);
}

TorusPointSet dilate_frac(const SequenceMatrix& x, std::span<const double> alpha) {
  if (alpha.size() != x.dim)
    fail(errc::domain_error, "dilate_frac: alpha dimension does not match sequence columns");
  for (double a : alpha)
    if (!std::isfinite(a)) fail(errc::domain_error, "dilate_frac: non-finite alpha");
  for (double v : x.values)
    if (!std::isfinite(v)) fail(errc::domain_error, "dilate_frac: non-finite sequence value");

  TorusPointSet pts;
  pts.n = x.n;
  pts.dim = x.dim;
  pts.coords.resize(x.n * x.dim);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t l = 0; l < x.dim; ++l) pts.at(i, l) = frac_product(x.at(i, l), alpha[l]);
  return pts;
}

}  // namespace ppclab
