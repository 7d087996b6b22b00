#include "ppclab/variance.hpp"

#include <cmath>
#include <complex>

#include "ppclab/error.hpp"
#include "ppclab/kernels.hpp"
#include "ppclab/measure.hpp"
#include "ppclab/parallel.hpp"
#include "ppclab/torus.hpp"

namespace ppclab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct KahanSum {
  double sum = 0.0, c = 0.0;
  void add(double v) {
    const double y = v - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

std::size_t poly_degree(std::size_t n, std::size_t dim, double r) {
  const double raw = std::pow(r * static_cast<double>(n), 1.0 / static_cast<double>(dim));
  auto k = static_cast<std::size_t>(std::ceil(raw - 1e-12));
  return std::max<std::size_t>(1, k);
}

// multi-index coefficient, j entries in [0,K] (coefficients are even in j)
double tensor_coeff(const TrigPolynomial& plus, const TrigPolynomial& minus, SelbergSign sign,
                    std::span<const std::size_t> j) {
  const std::size_t d = j.size();
  if (sign == SelbergSign::plus || d == 1) {
    const TrigPolynomial& p = sign == SelbergSign::plus ? plus : minus;
    double prod = 1.0;
    for (std::size_t l = 0; l < d; ++l) prod *= p.coeffs[j[l]];
    return prod;
  }
  double hi_prod = 1.0;
  for (std::size_t l = 0; l < d; ++l) hi_prod *= plus.coeffs[j[l]];
  double acc = -(static_cast<double>(d) - 1.0) * hi_prod;
  for (std::size_t l = 0; l < d; ++l) {
    double term = minus.coeffs[j[l]];
    for (std::size_t k = 0; k < d; ++k)
      if (k != l) term *= plus.coeffs[j[k]];
    acc += term;
  }
  return acc;
}

}  // namespace

double pair_statistic(const SequenceMatrix& x, std::span<const double> alpha, double s, double r,
                      SelbergSign sign) {
  if (alpha.size() != x.dim) fail(errc::domain_error, "pair_statistic: alpha dimension mismatch");
  if (!(s > 0.0) || !(r > 0.0)) fail(errc::domain_error, "pair_statistic: s, r must be positive");
  const std::size_t n = x.n;
  if (n < 2) return 0.0;
  const std::size_t d = x.dim;
  const std::size_t deg = poly_degree(n, d, r);
  const double scale = std::pow(static_cast<double>(n), 1.0 / static_cast<double>(d));
  const TrigPolynomial plus = selberg_poly(deg, s, scale, SelbergSign::plus);
  const TrigPolynomial minus =
      sign == SelbergSign::minus ? selberg_poly(deg, s, scale, SelbergSign::minus) : plus;

  // unit phases w_{n,l} = e({x_n^{(l)} alpha_l})
  std::vector<std::vector<double>> wre(d, std::vector<double>(n)), wim(d, std::vector<double>(n));
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t i = 0; i < n; ++i) {
      const double th = frac_product(x.at(i, l), alpha[l]);
      wre[l][i] = std::cos(kTwoPi * th);
      wim[l][i] = std::sin(kTwoPi * th);
    }

  const double nn = static_cast<double>(n);
  KahanSum acc;

  if (d == 1) {
    const TrigPolynomial& p = sign == SelbergSign::plus ? plus : minus;
    std::vector<double> sre(deg + 1, 0.0), sim(deg + 1, 0.0);
    active_kernels().accumulate_powers(wre[0].data(), wim[0].data(), n, deg, sre.data(),
                                       sim.data());
    acc.add(p.coeffs[0] * (nn * nn - nn));
    for (std::size_t j = 1; j <= deg; ++j) {
      const double power = sre[j] * sre[j] + sim[j] * sim[j];
      acc.add(2.0 * p.coeffs[j] * (power - nn));
    }
    return acc.sum / nn;
  }

  // d >= 2: power sums over the full box {-K..K}^d via per-coordinate tables
  const std::size_t width = 2 * deg + 1;
  std::size_t box = 1;
  for (std::size_t l = 0; l < d; ++l) {
    if (box > (std::size_t(1) << 27) / width)
      fail(errc::domain_error, "pair_statistic: spectral box too large");
    box *= width;
  }
  std::vector<double> sre(box, 0.0), sim(box, 0.0);
  std::vector<std::vector<double>> pr(d, std::vector<double>(width)),
      pi(d, std::vector<double>(width));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < d; ++l) {
      pr[l][deg] = 1.0;
      pi[l][deg] = 0.0;
      for (std::size_t j = 1; j <= deg; ++j) {
        const double a = pr[l][deg + j - 1], b = pi[l][deg + j - 1];
        pr[l][deg + j] = a * wre[l][i] - b * wim[l][i];
        pi[l][deg + j] = a * wim[l][i] + b * wre[l][i];
        pr[l][deg - j] = pr[l][deg + j];
        pi[l][deg - j] = -pi[l][deg + j];
      }
    }
    std::vector<std::size_t> idx(d, 0);
    std::size_t flat = 0;
    while (true) {
      double a = 1.0, b = 0.0;
      for (std::size_t l = 0; l < d; ++l) {
        const double c = a * pr[l][idx[l]] - b * pi[l][idx[l]];
        b = a * pi[l][idx[l]] + b * pr[l][idx[l]];
        a = c;
      }
      sre[flat] += a;
      sim[flat] += b;
      ++flat;
      std::size_t l = d;
      while (l-- > 0) {
        if (++idx[l] < width) break;
        idx[l] = 0;
      }
      if (l == std::size_t(-1)) break;
    }
  }

  std::vector<std::size_t> idx(d, 0), jabs(d, 0);
  std::size_t flat = 0;
  while (true) {
    for (std::size_t l = 0; l < d; ++l)
      jabs[l] = idx[l] >= deg ? idx[l] - deg : deg - idx[l];
    const double coeff = tensor_coeff(plus, minus, sign, jabs);
    const double power = sre[flat] * sre[flat] + sim[flat] * sim[flat];
    acc.add(coeff * (power - nn));
    ++flat;
    std::size_t l = d;
    while (l-- > 0) {
      if (++idx[l] < width) break;
      idx[l] = 0;
    }
    if (l == std::size_t(-1)) break;
  }
  return acc.sum / nn;
}

std::pair<double, double> variance_core(std::span<const double> stats, double center) {
  if (stats.size() < 2) fail(errc::domain_error, "variance_core: need >= 2 samples");
  const std::size_t n = stats.size();
  KahanSum total;
  for (double v : stats) {
    const double y = v - center;
    total.add(y * y);
  }
  const double mean = total.sum / static_cast<double>(n);

  // jackknife over leave-one-out means
  KahanSum dev2;
  for (double v : stats) {
    const double y = (v - center) * (v - center);
    const double loo = (total.sum - y) / static_cast<double>(n - 1);
    dev2.add((loo - mean) * (loo - mean));
  }
  const double se =
      std::sqrt(dev2.sum * static_cast<double>(n - 1) / static_cast<double>(n));
  return {mean, se};
}

namespace {

std::vector<double> statistic_draws(const SequenceMatrix& x, double s, double r,
                                    std::size_t samples, std::uint64_t seed, SelbergSign sign) {
  MeasureSpec spec;
  spec.gamma.assign(x.dim, 0.5);
  const MuSampler sampler(spec);
  std::vector<double> stats(samples, 0.0);
  parallel_chunks(samples, 1, [&](std::size_t, std::size_t b, std::size_t e) {
    std::vector<double> alpha(x.dim);
    for (std::size_t i = b; i < e; ++i) {
      sampler.draw(seed, i, alpha);
      stats[i] = pair_statistic(x, alpha, s, r, sign);
    }
  });
  return stats;
}

}  // namespace

MeanCalibration mean_calibration(const SequenceMatrix& x, double s, double r, std::size_t samples,
                                 std::uint64_t seed, SelbergSign sign) {
  if (samples < 2) fail(errc::domain_error, "mean_calibration: need >= 2 samples");
  const std::size_t deg = poly_degree(x.n, x.dim, r);
  const double scale = std::pow(static_cast<double>(x.n), 1.0 / static_cast<double>(x.dim));
  const double c0 = selberg_poly(deg, s, scale, sign).c0();

  const auto stats = statistic_draws(x, s, r, samples, seed, sign);
  KahanSum acc;
  for (double v : stats) acc.add(v);
  MeanCalibration out;
  out.mc_mean = acc.sum / static_cast<double>(samples);
  out.target = static_cast<double>(x.n) * std::pow(c0, static_cast<double>(x.dim));
  out.gap = std::fabs(out.mc_mean - out.target);
  KahanSum dev;
  for (double v : stats) dev.add((v - out.mc_mean) * (v - out.mc_mean));
  out.mc_stderr = std::sqrt(dev.sum / static_cast<double>(samples - 1) /
                            static_cast<double>(samples));
  return out;
}

VarianceEstimate variance_estimate(const SequenceMatrix& x, double s, double r,
                                   std::size_t samples, std::uint64_t seed) {
  if (samples < 2) fail(errc::domain_error, "variance_estimate: need >= 2 samples");
  VarianceEstimate est;
  est.n = x.n;
  est.r = r;
  est.s = s;
  est.samples = samples;
  est.seed = seed;

  if (x.n < 2) return est;  // statistic is identically 0

  const std::size_t deg = poly_degree(x.n, x.dim, r);
  const double scale = std::pow(static_cast<double>(x.n), 1.0 / static_cast<double>(x.dim));
  const double c0 = selberg_poly(deg, s, scale, SelbergSign::plus).c0();
  const double center =
      (static_cast<double>(x.n) - 1.0) * std::pow(c0, static_cast<double>(x.dim));

  const auto stats = statistic_draws(x, s, r, samples, seed, SelbergSign::plus);
  KahanSum acc;
  for (double v : stats) acc.add(v);
  est.mean_stat = acc.sum / static_cast<double>(samples);
  const auto [var, se] = variance_core(stats, center);
  est.var_stat = var;
  est.std_error = se;
  return est;
}

}  // namespace ppclab
