#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ppclab {

// Product measure with per-coordinate density sin^2(gamma x)/(pi gamma x^2);
// gamma = 1/2 in every coordinate gives the 2 sin^2(x/2)/(pi x^2) measure.
struct MeasureSpec {
  std::vector<double> gamma;
};

// prod_l max(1 - |t_l|/(2 gamma_l), 0); plain-frequency transform
// \int e^{-i t.x} dmu(x), supported on prod (-2 gamma_l, 2 gamma_l).
double mu_hat(std::span<const double> t, const MeasureSpec& spec);

// density value, removable singularity at 0 filled with gamma/pi
double mu_density_1d(double x, double gamma);

// Heavy 1/x^2 tails rule out plain rejection: draws go through a per-gamma
// inverse-CDF table (adaptive Simpson increments on a knot grid reaching
// 1e4/gamma) with an analytic Pareto inverse past the last knot.  Draw k of a
// seeded run uses the stream (seed, k), so any worker layout produces the
// same numbers.
class MuSampler {
 public:
  explicit MuSampler(MeasureSpec spec);

  std::size_t dim() const { return spec_.gamma.size(); }
  void draw(std::uint64_t seed, std::uint64_t index, std::span<double> out) const;
  // n draws, row-major n x dim
  std::vector<double> sample(std::uint64_t seed, std::size_t n) const;
  // exposed for calibration tests
  double inverse_cdf(double u, std::size_t coord) const;

 private:
  struct Table {
    double gamma = 0.0;
    double tail_mass = 0.0;            // one-sided, past the last knot
    std::vector<double> x;             // knots, 0 = origin
    std::vector<double> cdf;           // CDF(x_i) - 1/2 (right half)
    std::vector<double> pdf;           // density at knots
  };
  const Table& table_for(std::size_t coord) const;

  MeasureSpec spec_;
  std::vector<Table> tables_;          // one per distinct gamma
  std::vector<std::size_t> table_of_;  // coord -> table index
};

// K(xi) = sin^2(a xi log N) / (pi xi^2 a log N), a = (1+delta)/d; same Fejer
// family as the measure density.  khat(v) = max(1 - v/(2 a log N), 0).
struct KernelParams {
  std::size_t dim = 1;
  double delta = 0.0;   // > 0
  double n_scale = 3.0; // N >= 3 so log N > 1
};

double k_kernel(double xi, const KernelParams& p);
double k_hat(double v, const KernelParams& p);

}  // namespace ppclab
