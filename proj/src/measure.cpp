#include "ppclab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ppclab/error.hpp"
#include "ppclab/rng.hpp"

namespace ppclab {

namespace {

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double adaptive_simpson(double (*f)(double, double), double gamma, double a, double b, double fa,
                        double fm, double fb, double whole, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm, gamma), frm = f(rm, gamma);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * eps)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, gamma, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         adaptive_simpson(f, gamma, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

double integrate_density(double gamma, double a, double b) {
  const double fa = mu_density_1d(a, gamma);
  const double fb = mu_density_1d(b, gamma);
  const double fm = mu_density_1d(0.5 * (a + b), gamma);
  const double whole = simpson(fa, fm, fb, b - a);
  return adaptive_simpson([](double x, double g) { return mu_density_1d(x, g); }, gamma, a, b, fa,
                          fm, fb, whole, 1e-14, 24);
}

}  // namespace

double mu_hat(std::span<const double> t, const MeasureSpec& spec) {
  if (t.size() != spec.gamma.size()) fail(errc::domain_error, "mu_hat: dimension mismatch");
  double prod = 1.0;
  for (std::size_t l = 0; l < t.size(); ++l) {
    const double g = spec.gamma[l];
    if (!(g > 0.0)) fail(errc::domain_error, "mu_hat: gamma must be positive");
    prod *= std::max(1.0 - std::fabs(t[l]) / (2.0 * g), 0.0);
  }
  return prod;
}

double mu_density_1d(double x, double gamma) {
  const double u = gamma * x;
  if (std::fabs(u) < 1e-4) {
    // sin^2(u)/u^2 = 1 - u^2/3 + 2u^4/45 - ...
    return gamma / M_PI * (1.0 - u * u / 3.0);
  }
  const double s = std::sin(u);
  return s * s / (M_PI * gamma * x * x);
}

MuSampler::MuSampler(MeasureSpec spec) : spec_(std::move(spec)) {
  if (spec_.gamma.empty()) fail(errc::domain_error, "MuSampler: empty gamma");
  std::map<double, std::size_t> seen;
  table_of_.resize(spec_.gamma.size());
  for (std::size_t l = 0; l < spec_.gamma.size(); ++l) {
    const double g = spec_.gamma[l];
    if (!(g > 0.0)) fail(errc::domain_error, "MuSampler: gamma must be positive");
    auto it = seen.find(g);
    if (it != seen.end()) {
      table_of_[l] = it->second;
      continue;
    }

    Table tab;
    tab.gamma = g;
    const double x_cut = 1e4 / g;
    const double x_knee = 64.0 / g;
    const std::size_t half = 8192;  // 2^14 knots over the symmetric range
    tab.x.reserve(half + 1);
    tab.x.push_back(0.0);
    for (std::size_t i = 1; i <= half / 2; ++i)
      tab.x.push_back(x_knee * static_cast<double>(i) / static_cast<double>(half / 2));
    const double ratio = std::pow(x_cut / x_knee, 1.0 / static_cast<double>(half / 2));
    double cur = x_knee;
    for (std::size_t i = 0; i < half / 2; ++i) {
      cur *= ratio;
      tab.x.push_back(std::min(cur, x_cut));
    }
    tab.x.back() = x_cut;

    tab.cdf.resize(tab.x.size());
    tab.pdf.resize(tab.x.size());
    tab.cdf[0] = 0.0;
    tab.pdf[0] = mu_density_1d(0.0, g);
    for (std::size_t i = 1; i < tab.x.size(); ++i) {
      tab.cdf[i] = tab.cdf[i - 1] + integrate_density(g, tab.x[i - 1], tab.x[i]);
      tab.pdf[i] = mu_density_1d(tab.x[i], g);
    }
    // analytic tail model: density ~ 1/(2 pi g x^2), mass past x is 1/(2 pi g x)
    tab.tail_mass = 1.0 / (2.0 * M_PI * g * x_cut);
    const double rho = (0.5 - tab.tail_mass) / tab.cdf.back();
    for (auto& v : tab.cdf) v *= rho;
    for (auto& v : tab.pdf) v *= rho;

    seen[g] = tables_.size();
    table_of_[l] = tables_.size();
    tables_.push_back(std::move(tab));
  }
}

const MuSampler::Table& MuSampler::table_for(std::size_t coord) const {
  return tables_[table_of_[coord]];
}

double MuSampler::inverse_cdf(double u, std::size_t coord) const {
  if (!(u > 0.0 && u < 1.0)) fail(errc::domain_error, "inverse_cdf: u must lie in (0,1)");
  const Table& tab = table_for(coord);
  const double v = u - 0.5;
  const double a = std::fabs(v);
  const double sign = v < 0.0 ? -1.0 : 1.0;
  if (a >= 0.5 - tab.tail_mass) {
    const double p = std::max(0.5 - a, 1e-300);  // upper-tail mass
    return sign / (2.0 * M_PI * tab.gamma * p);
  }
  const auto it = std::upper_bound(tab.cdf.begin(), tab.cdf.end(), a);
  const std::size_t hi = static_cast<std::size_t>(it - tab.cdf.begin());
  const std::size_t lo = hi - 1;
  const double need = a - tab.cdf[lo];
  const double dx = tab.x[hi] - tab.x[lo];
  const double f0 = tab.pdf[lo];
  const double slope = (tab.pdf[hi] - f0) / dx;
  // local linear density: solve f0 t + slope t^2 / 2 = need
  double t;
  if (std::fabs(slope) * dx < 1e-12 * std::max(f0, 1e-300)) {
    t = f0 > 0.0 ? need / f0 : 0.5 * dx;
  } else {
    const double disc = f0 * f0 + 2.0 * slope * need;
    t = disc > 0.0 ? (std::sqrt(disc) - f0) / slope : need / std::max(f0, 1e-300);
  }
  t = std::clamp(t, 0.0, dx);
  return sign * (tab.x[lo] + t);
}

void MuSampler::draw(std::uint64_t seed, std::uint64_t index, std::span<double> out) const {
  if (out.size() != dim()) fail(errc::domain_error, "draw: output span size mismatch");
  Rng rng(seed, index);
  for (std::size_t l = 0; l < dim(); ++l) {
    double u = rng.next_double();
    if (u <= 0.0) u = 0x1.0p-53;
    out[l] = inverse_cdf(u, l);
  }
}

std::vector<double> MuSampler::sample(std::uint64_t seed, std::size_t n) const {
  std::vector<double> out(n * dim());
  for (std::size_t i = 0; i < n; ++i)
    draw(seed, i, {out.data() + i * dim(), dim()});
  return out;
}

double k_kernel(double xi, const KernelParams& p) {
  if (!(p.delta > 0.0) || !(p.n_scale >= 3.0) || p.dim < 1)
    fail(errc::domain_error, "k_kernel: bad parameters");
  const double c = (1.0 + p.delta) / static_cast<double>(p.dim) * std::log(p.n_scale);
  return mu_density_1d(xi, c);
}

double k_hat(double v, const KernelParams& p) {
  if (!(p.delta > 0.0) || !(p.n_scale >= 3.0) || p.dim < 1)
    fail(errc::domain_error, "k_hat: bad parameters");
  const double c = (1.0 + p.delta) / static_cast<double>(p.dim) * std::log(p.n_scale);
  return std::max(1.0 - std::fabs(v) / (2.0 * c), 0.0);
}

}  // namespace ppclab
