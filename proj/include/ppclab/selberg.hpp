#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ppclab {

enum class SelbergSign { plus, minus };

// Degree-K trigonometric polynomial sum_{|j|<=K} c_j e(jx) with real, even
// coefficients (c_{-j} = c_j), majorant or minorant of the indicator of
// ||x|| <= s/scale on the torus.  Construction: Vaaler's weighted truncation
// of the sawtooth plus the Fejer-kernel correction, which meets
//   c_0 = 2s/scale +- 1/(K+1)                        exactly, and
//   |c_j| <= min(2s/scale, 1/(pi |j|)) + 1/(K+1)     for j != 0.
struct TrigPolynomial {
  std::size_t degree = 0;         // K
  std::vector<double> coeffs;     // c_0..c_K
  SelbergSign sign = SelbergSign::plus;
  double s = 0.0;
  double scale = 1.0;

  double c0() const { return coeffs[0]; }
  double half_length() const { return s / scale; }
  double eval(double x) const;  // c_0 + 2 sum_j c_j cos(2 pi j x)
};

// Requires K >= 1 and 2s/scale < 1 (interval shorter than the torus).
TrigPolynomial selberg_poly(std::size_t k, double s, double scale, SelbergSign sign);

// Inclusive-threshold interval indicator chi(||x|| <= h).
double interval_indicator(double x, double h);

// Product of factor evaluations.  The multi-index coefficient of this tensor
// product is the product of per-coordinate coefficients.  Note the plain
// product of minorants is NOT a lower bound of the box indicator for d >= 2
// (two negative factors multiply to a positive value); use
// tensor_minorant_eval for a valid sandwich.
double tensor_eval(std::span<const TrigPolynomial> polys, std::span<const double> x);

// sum_l f^-(x_l) prod_{k!=l} f^+(x_k) - (d-1) prod_k f^+(x_k); a pointwise
// lower bound of the box indicator whenever f^- <= chi <= f^+ and f^+ >= 0.
double tensor_minorant_eval(std::span<const TrigPolynomial> minus_polys,
                            std::span<const TrigPolynomial> plus_polys,
                            std::span<const double> x);

// Vaaler weight pi t (1-t) cot(pi t) + t on (0,1).
double vaaler_weight(double t);

}  // namespace ppclab
