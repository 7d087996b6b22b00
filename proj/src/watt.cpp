#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "ppclab/energy.hpp"
#include "ppclab/error.hpp"
#include "ppclab/parallel.hpp"

namespace ppclab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// all ordered M-tuples over A, as K-vectors of omega sums
std::vector<std::vector<double>> tuple_sums(std::size_t asize,
                                            const std::vector<std::vector<double>>& omega,
                                            std::size_t k, std::size_t m) {
  std::vector<std::vector<double>> sums;
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    std::vector<double> s(k, 0.0);
    for (std::size_t pos = 0; pos < m; ++pos)
      for (std::size_t c = 0; c < k; ++c) s[c] += omega[idx[pos]][c];
    sums.push_back(std::move(s));
    std::size_t pos = 0;
    for (; pos < m; ++pos) {
      if (++idx[pos] < asize) break;
      idx[pos] = 0;
    }
    if (pos == m) break;
  }
  return sums;
}

double quad_w(const std::vector<std::vector<double>>& omega, std::span<const double> dvals,
              std::size_t m, std::size_t res) {
  const std::size_t k = dvals.size();
  std::size_t total = 1;
  for (std::size_t c = 0; c < k; ++c) {
    if (total > (std::size_t(1) << 26) / res)
      fail(errc::quadrature_error, "watt_ratio: quadrature grid too large");
    total *= res;
  }
  double cell = 1.0;
  for (std::size_t c = 0; c < k; ++c) cell *= 2.0 * dvals[c] / static_cast<double>(res);

  std::vector<double> partial(chunk_count(total, 1024), 0.0);
  parallel_chunks(total, 1024, [&](std::size_t chunk, std::size_t b, std::size_t e) {
    double local = 0.0;
    std::vector<double> x(k);
    for (std::size_t cellidx = b; cellidx < e; ++cellidx) {
      std::size_t rem = cellidx;
      for (std::size_t c = k; c-- > 0;) {
        const std::size_t i = rem % res;
        rem /= res;
        x[c] = -dvals[c] + (static_cast<double>(i) + 0.5) * (2.0 * dvals[c] / res);
      }
      std::complex<double> t(0.0, 0.0);
      for (const auto& w : omega) {
        double phase = 0.0;
        for (std::size_t c = 0; c < k; ++c) phase += w[c] * x[c];
        t += std::complex<double>(std::cos(kTwoPi * phase), std::sin(kTwoPi * phase));
      }
      local += std::pow(std::norm(t), static_cast<double>(m));
    }
    partial[chunk] = local;
  });
  return std::accumulate(partial.begin(), partial.end(), 0.0) * cell;
}

}  // namespace

WattResult watt_ratio(std::span<const long> a, const std::vector<std::vector<double>>& omega,
                      std::span<const double> delta, std::size_t m, std::size_t initial_res) {
  const std::size_t k = delta.size();
  if (k < 1) fail(errc::domain_error, "watt_ratio: K must be >= 1");
  if (m < 1) fail(errc::domain_error, "watt_ratio: M must be >= 1");
  if (a.empty()) fail(errc::domain_error, "watt_ratio: A must be nonempty");
  if (omega.size() != a.size()) fail(errc::domain_error, "watt_ratio: omega table size mismatch");
  for (const auto& row : omega)
    if (row.size() != k) fail(errc::domain_error, "watt_ratio: omega row width mismatch");
  for (double d : delta)
    if (!(d > 0.0)) fail(errc::domain_error, "watt_ratio: delta entries must be positive");

  // exact count
  const auto sums = tuple_sums(a.size(), omega, k, m);
  std::uint64_t v = 0;
  for (const auto& su : sums)
    for (const auto& sv : sums) {
      bool ok = true;
      for (std::size_t c = 0; c < k && ok; ++c) ok = std::fabs(su[c] - sv[c]) < delta[c];
      v += ok;
    }

  // 2 delta_k D_k = 1
  std::vector<double> dvals(k);
  for (std::size_t c = 0; c < k; ++c) dvals[c] = 1.0 / (2.0 * delta[c]);

  std::size_t res = std::max<std::size_t>(8, initial_res);
  double prev = quad_w(omega, dvals, m, res);
  double cur = prev;
  bool settled = false;
  for (int iter = 0; iter < 14; ++iter) {
    res *= 2;
    cur = quad_w(omega, dvals, m, res);
    const double scale = std::max(std::fabs(cur), 1e-300);
    if (std::fabs(cur - prev) / scale < 0.01) {
      settled = true;
      break;
    }
    prev = cur;
  }
  if (!settled)
    fail(errc::quadrature_error, "watt_ratio: quadrature failed to settle within 1%");

  WattResult out;
  out.v = v;
  double dprod = 1.0;
  for (double d : delta) dprod *= d;
  out.scaled_w = dprod * cur;
  out.ratio = static_cast<double>(v) / out.scaled_w;
  return out;
}

}  // namespace ppclab
