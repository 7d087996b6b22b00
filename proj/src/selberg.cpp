#include "ppclab/selberg.hpp"

#include <cmath>

#include "ppclab/error.hpp"
#include "ppclab/torus.hpp"

namespace ppclab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double vaaler_weight(double t) {
  return M_PI * t * (1.0 - t) / std::tan(M_PI * t) + t;
}

double TrigPolynomial::eval(double x) const {
  // rotation recurrence for cos(2 pi j x)
  const double c1 = std::cos(kTwoPi * x);
  const double s1 = std::sin(kTwoPi * x);
  double cj = c1, sj = s1;
  double acc = coeffs[0];
  for (std::size_t j = 1; j <= degree; ++j) {
    acc += 2.0 * coeffs[j] * cj;
    const double c = cj * c1 - sj * s1;
    sj = sj * c1 + cj * s1;
    cj = c;
  }
  return acc;
}

TrigPolynomial selberg_poly(std::size_t k, double s, double scale, SelbergSign sign) {
  if (k < 1) fail(errc::domain_error, "selberg_poly: degree must be >= 1");
  if (!(s > 0.0) || !(scale > 0.0))
    fail(errc::domain_error, "selberg_poly: s and scale must be positive");
  const double h = s / scale;
  if (!(2.0 * h < 1.0))
    fail(errc::domain_error, "selberg_poly: interval 2s/scale must be shorter than the torus");

  TrigPolynomial p;
  p.degree = k;
  p.sign = sign;
  p.s = s;
  p.scale = scale;
  p.coeffs.resize(k + 1);
  const double kp1 = static_cast<double>(k + 1);
  const double sgn = sign == SelbergSign::plus ? 1.0 : -1.0;
  p.coeffs[0] = 2.0 * h + sgn / kp1;
  for (std::size_t j = 1; j <= k; ++j) {
    const double jj = static_cast<double>(j);
    const double saw = vaaler_weight(jj / kp1) * std::sin(kTwoPi * jj * h) / (M_PI * jj);
    const double fejer = (1.0 / kp1) * (1.0 - jj / kp1) * std::cos(kTwoPi * jj * h);
    p.coeffs[j] = saw + sgn * fejer;
  }
  return p;
}

double interval_indicator(double x, double h) { return int_dist_1d(x) <= h ? 1.0 : 0.0; }

double tensor_eval(std::span<const TrigPolynomial> polys, std::span<const double> x) {
  if (polys.size() != x.size())
    fail(errc::domain_error, "tensor_eval: dimension mismatch");
  double prod = 1.0;
  for (std::size_t l = 0; l < polys.size(); ++l) prod *= polys[l].eval(x[l]);
  return prod;
}

double tensor_minorant_eval(std::span<const TrigPolynomial> minus_polys,
                            std::span<const TrigPolynomial> plus_polys,
                            std::span<const double> x) {
  const std::size_t d = x.size();
  if (minus_polys.size() != d || plus_polys.size() != d)
    fail(errc::domain_error, "tensor_minorant_eval: dimension mismatch");
  std::vector<double> lo(d), hi(d);
  for (std::size_t l = 0; l < d; ++l) {
    lo[l] = minus_polys[l].eval(x[l]);
    hi[l] = plus_polys[l].eval(x[l]);
  }
  double hi_prod = 1.0;
  for (std::size_t l = 0; l < d; ++l) hi_prod *= hi[l];
  double acc = -(static_cast<double>(d) - 1.0) * hi_prod;
  for (std::size_t l = 0; l < d; ++l) {
    double term = lo[l];
    for (std::size_t kk = 0; kk < d; ++kk)
      if (kk != l) term *= hi[kk];
    acc += term;
  }
  return acc;
}

}  // namespace ppclab
