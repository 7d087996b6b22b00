#include "ppclab/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ppclab/error.hpp"
#include "ppclab/kernels.hpp"
#include "ppclab/parallel.hpp"

namespace ppclab {

namespace {

struct KeyId {
  double key;
  std::uint32_t id;
};

// near-collision count between two sorted arrays: #{(a,b): |a-b| < gamma}
std::uint64_t cross_window_count(const std::vector<double>& sa, const std::vector<double>& sb,
                                 double gamma) {
  std::uint64_t count = 0;
  std::size_t lo = 0, hi = 0;
  for (double a : sa) {
    while (lo < sb.size() && !(sb[lo] > a - gamma)) ++lo;
    while (hi < sb.size() && sb[hi] < a + gamma) ++hi;
    count += hi - lo;
  }
  return count;
}

// Exact #{(p,q) in P^2 : |key_p - key_q| < g0 and |aux_l p - aux_l q| < g_l},
// P = all n^2 ordered index pairs, sums per constrained column.  The window
// slides over the sorted key sums; remaining coordinates are filtered by the
// SIMD kernels.  Runs of equal keys (integer-valued columns) share their
// window and are counted by a sorted cross-scan instead of per-row passes.
std::uint64_t sum_collision_count(const std::vector<std::vector<double>>& cols,
                                  std::span<const double> gammas, std::size_t n) {
  const std::size_t dprime = cols.size();
  const std::size_t pairs = n * n;
  const double g0 = gammas[0];

  if (dprime == 1) {
    std::vector<double> keys(pairs);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) keys[a * n + b] = cols[0][a] + cols[0][b];
    std::sort(keys.begin(), keys.end());
    std::vector<std::uint64_t> partial(chunk_count(pairs, 4096), 0);
    parallel_chunks(pairs, 4096, [&](std::size_t chunk, std::size_t b, std::size_t e) {
      std::uint64_t local = 0;
      std::size_t lo = std::upper_bound(keys.begin(), keys.end(), keys[b] - g0) - keys.begin();
      std::size_t hi = std::lower_bound(keys.begin(), keys.end(), keys[b] + g0) - keys.begin();
      for (std::size_t i = b; i < e; ++i) {
        while (lo < pairs && !(keys[lo] > keys[i] - g0)) ++lo;
        while (hi < pairs && keys[hi] < keys[i] + g0) ++hi;
        local += hi - lo;
      }
      partial[chunk] = local;
    });
    return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  }

  std::vector<KeyId> order(pairs);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      order[a * n + b] = {cols[0][a] + cols[0][b], static_cast<std::uint32_t>(a * n + b)};
  std::sort(order.begin(), order.end(),
            [](const KeyId& x, const KeyId& y) { return x.key < y.key; });

  std::vector<double> keys(pairs);
  for (std::size_t i = 0; i < pairs; ++i) keys[i] = order[i].key;
  std::vector<std::vector<double>> aux(dprime - 1, std::vector<double>(pairs));
  for (std::size_t l = 1; l < dprime; ++l) {
    auto& dst = aux[l - 1];
    const auto& col = cols[l];
    for (std::size_t i = 0; i < pairs; ++i) {
      const std::uint32_t id = order[i].id;
      dst[i] = col[id / n] + col[id % n];
    }
  }
  order.clear();
  order.shrink_to_fit();

  const Kernels& kern = active_kernels();
  std::vector<std::uint64_t> partial(chunk_count(pairs, 1024), 0);
  parallel_chunks(pairs, 1024, [&](std::size_t chunk, std::size_t cb, std::size_t ce) {
    std::uint64_t local = 0;
    std::size_t lo = std::upper_bound(keys.begin(), keys.end(), keys[cb] - g0) - keys.begin();
    std::size_t hi = std::lower_bound(keys.begin(), keys.end(), keys[cb] + g0) - keys.begin();
    std::vector<double> run_vals, win_vals;
    std::size_t i = cb;
    while (i < ce) {
      while (lo < pairs && !(keys[lo] > keys[i] - g0)) ++lo;
      while (hi < pairs && keys[hi] < keys[i] + g0) ++hi;
      std::size_t run_end = i + 1;
      while (run_end < ce && keys[run_end] == keys[i]) ++run_end;
      if (dprime == 2 && run_end - i >= 64) {
        run_vals.assign(aux[0].begin() + i, aux[0].begin() + run_end);
        win_vals.assign(aux[0].begin() + lo, aux[0].begin() + hi);
        std::sort(run_vals.begin(), run_vals.end());
        std::sort(win_vals.begin(), win_vals.end());
        local += cross_window_count(run_vals, win_vals, gammas[1]);
        i = run_end;
        continue;
      }
      for (; i < run_end; ++i) {
        if (dprime == 2) {
          local += kern.count_window_lt(aux[0].data(), lo, hi, aux[0][i], gammas[1]);
        } else if (dprime == 3) {
          local += kern.count_window2_lt(aux[0].data(), aux[0][i], gammas[1], aux[1].data(),
                                         aux[1][i], gammas[2], lo, hi);
        } else {
          for (std::size_t j = lo; j < hi; ++j) {
            bool ok = true;
            for (std::size_t l = 0; l + 1 < dprime && ok; ++l)
              ok = std::fabs(aux[l][j] - aux[l][i]) < gammas[l + 1];
            local += ok;
          }
        }
      }
    }
    partial[chunk] = local;
  });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

void require_gamma_unit(double g, const char* who) {
  if (!(g > 0.0 && g <= 1.0))
    fail(errc::domain_error, std::string(who) + ": gamma must lie in (0,1]");
}

}  // namespace

std::uint64_t energy_1d(std::span<const double> x, double gamma, std::size_t n) {
  require_gamma_unit(gamma, "energy_1d");
  if (n < 1) fail(errc::domain_error, "energy_1d: N must be >= 1");
  if (x.size() < n) fail(errc::domain_error, "energy_1d: sequence shorter than N");
  std::vector<std::vector<double>> cols(1);
  cols[0].assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
  const double g = gamma;
  return sum_collision_count(cols, std::span<const double>(&g, 1), n);
}

std::uint64_t joint_energy(const SequenceMatrix& x, std::span<const double> gamma,
                           std::span<const std::size_t> subset, std::size_t n) {
  if (subset.empty()) fail(errc::domain_error, "joint_energy: subset D' must be nonempty");
  if (gamma.size() != x.dim)
    fail(errc::domain_error, "joint_energy: gamma must have one entry per column");
  for (double g : gamma) require_gamma_unit(g, "joint_energy");
  if (n < 1 || n > x.n) fail(errc::domain_error, "joint_energy: N out of range");
  std::vector<std::vector<double>> cols;
  std::vector<double> g;
  for (std::size_t l : subset) {
    if (l >= x.dim) fail(errc::domain_error, "joint_energy: subset index out of range");
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = x.at(i, l);
    cols.push_back(std::move(c));
    g.push_back(gamma[l]);
  }
  return sum_collision_count(cols, g, n);
}

std::uint64_t block_energy(const SequenceMatrix& x, std::span<const double> gamma, std::size_t n) {
  if (gamma.size() != x.dim)
    fail(errc::domain_error, "block_energy: gamma must have one entry per column");
  for (double g : gamma)
    if (!(g > 0.0)) fail(errc::domain_error, "block_energy: gamma must be positive");
  if (n < 1) fail(errc::domain_error, "block_energy: N must be >= 1");
  if (x.n < n) fail(errc::domain_error, "block_energy: sequence not defined at index N");
  const std::size_t last = std::min(2 * n, x.n);  // rows n..last, 1-based
  const std::size_t len = last - n + 1;
  std::vector<std::vector<double>> cols(x.dim, std::vector<double>(len));
  for (std::size_t l = 0; l < x.dim; ++l)
    for (std::size_t i = 0; i < len; ++i) cols[l][i] = x.at(n - 1 + i, l);
  return sum_collision_count(cols, gamma, len);
}

std::vector<double> abs_diff_set(const SequenceMatrix& x, std::span<const std::size_t> subset) {
  if (subset.empty()) fail(errc::domain_error, "abs_diff_set: subset must be nonempty");
  std::vector<double> z;
  z.reserve((x.n * x.n - x.n) * subset.size());
  for (std::size_t nidx = 0; nidx < x.n; ++nidx)
    for (std::size_t midx = 0; midx < x.n; ++midx) {
      if (nidx == midx) continue;
      for (std::size_t l : subset) z.push_back(std::fabs(x.at(nidx, l) - x.at(midx, l)));
    }
  return z;
}

std::uint64_t dilated_pair_count(std::span<const double> z, std::size_t m, std::size_t dim,
                                 const DyadicBlock& block, DilationLock lock) {
  if (m < 1) fail(errc::domain_error, "dilated_pair_count: M must be >= 1");
  if (dim < 1 || block.u.size() != dim)
    fail(errc::domain_error, "dilated_pair_count: block dimension mismatch");
  if (z.size() != m * dim) fail(errc::domain_error, "dilated_pair_count: bad z shape");
  for (std::uint32_t u : block.u)
    if (u < 1) fail(errc::domain_error, "dilated_pair_count: u entries must be >= 1");

  std::vector<std::uint64_t> jlo(dim), jhi(dim);
  for (std::size_t l = 0; l < dim; ++l) {
    jlo[l] = std::uint64_t{1} << (block.u[l] - 1);
    jhi[l] = std::uint64_t{1} << block.u[l];
  }

  auto pair_count = [&](const std::vector<std::uint64_t>& j, const std::vector<std::uint64_t>& t) {
    std::uint64_t count = 0;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        bool ok = true;
        for (std::size_t l = 0; l < dim && ok; ++l)
          ok = std::fabs(static_cast<double>(j[l]) * z[a * dim + l] -
                         static_cast<double>(t[l]) * z[b * dim + l]) < 1.0;
        count += ok;
      }
    return count;
  };

  auto advance = [&](std::vector<std::uint64_t>& v) {
    for (std::size_t l = 0; l < dim; ++l) {
      if (++v[l] < jhi[l]) return true;
      v[l] = jlo[l];
    }
    return false;
  };

  std::uint64_t total = 0;
  std::vector<std::uint64_t> j(jlo);
  do {
    if (lock == DilationLock::equal) {
      total += pair_count(j, j);
      continue;
    }
    std::vector<std::uint64_t> t(jlo);
    do {
      if (lock == DilationLock::ratio) {
        bool locked = true;
        for (std::size_t l = 1; l < dim && locked; ++l) locked = j[l] * t[0] == j[0] * t[l];
        if (!locked) continue;
      }
      total += pair_count(j, t);
    } while (advance(t));
  } while (advance(j));
  return total;
}

std::pair<double, double> fit_exponent(std::span<const std::size_t> ns,
                                       std::span<const std::uint64_t> counts) {
  if (ns.size() != counts.size()) fail(errc::domain_error, "fit_exponent: length mismatch");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (counts[i] == 0) fail(errc::domain_error, "fit_exponent: counts must be positive");
    xs.push_back(std::log(static_cast<double>(ns[i])));
    ys.push_back(std::log(static_cast<double>(counts[i])));
  }
  std::vector<double> distinct(xs);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 3) fail(errc::domain_error, "fit_exponent: need >= 3 distinct N values");

  const double k = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / k;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / k;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double resid = ys[i] - (intercept + slope * xs[i]);
    rss += resid * resid;
  }
  const double stderr_slope =
      xs.size() > 2 ? std::sqrt(rss / (k - 2.0) / sxx) : 0.0;
  return {slope, stderr_slope};
}

}  // namespace ppclab
