// SIMD variants of the counting kernels.  On x86_64 this translation unit is
// compiled with -mavx2 -mfma and must only be entered after the runtime CPU
// check in kernels.cpp; on aarch64 the native width is NEON's.

#include "ppclab/kernels.hpp"

#if __has_include(<experimental/simd>) && (defined(__x86_64__) || defined(__aarch64__))
#define PPCLAB_HAVE_SIMD 1
#include <experimental/simd>

#include <cmath>
#include <vector>
#endif

namespace ppclab {

#if PPCLAB_HAVE_SIMD

namespace {

namespace stdx = std::experimental;
using vd = stdx::native_simd<double>;
constexpr std::size_t V = vd::size();

inline vd wrap_dist(vd a, double b) {
  const vd t = stdx::abs(a - vd(b));
  return stdx::min(t, vd(1.0) - t);
}

std::uint64_t count_near_sup(const double* const* cols, std::size_t dim, const double* q,
                             std::size_t begin, std::size_t end, double thr) {
  std::uint64_t count = 0;
  std::size_t i = begin;
  for (; i + V <= end; i += V) {
    vd m(0.0);
    for (std::size_t l = 0; l < dim; ++l) {
      vd c(cols[l] + i, stdx::element_aligned);
      m = stdx::max(m, wrap_dist(c, q[l]));
    }
    count += stdx::popcount(m <= vd(thr));
  }
  for (; i < end; ++i) {
    double m = 0.0;
    for (std::size_t l = 0; l < dim; ++l) {
      const double t = std::fabs(cols[l][i] - q[l]);
      m = std::max(m, std::min(t, 1.0 - t));
    }
    count += (m <= thr);
  }
  return count;
}

std::uint64_t count_near_euclid(const double* const* cols, std::size_t dim, const double* q,
                                std::size_t begin, std::size_t end, double thr2) {
  std::uint64_t count = 0;
  std::size_t i = begin;
  for (; i + V <= end; i += V) {
    vd ss(0.0);
    for (std::size_t l = 0; l < dim; ++l) {
      vd c(cols[l] + i, stdx::element_aligned);
      const vd d = wrap_dist(c, q[l]);
      ss = ss + d * d;
    }
    count += stdx::popcount(ss <= vd(thr2));
  }
  for (; i < end; ++i) {
    double ss = 0.0;
    for (std::size_t l = 0; l < dim; ++l) {
      const double t = std::fabs(cols[l][i] - q[l]);
      const double d = std::min(t, 1.0 - t);
      ss += d * d;
    }
    count += (ss <= thr2);
  }
  return count;
}

std::uint64_t count_window_lt(const double* v, std::size_t begin, std::size_t end, double c,
                              double gamma) {
  std::uint64_t count = 0;
  std::size_t i = begin;
  for (; i + V <= end; i += V) {
    vd x(v + i, stdx::element_aligned);
    count += stdx::popcount(stdx::abs(x - vd(c)) < vd(gamma));
  }
  for (; i < end; ++i) count += (std::fabs(v[i] - c) < gamma);
  return count;
}

std::uint64_t count_window2_lt(const double* v1, double c1, double g1, const double* v2, double c2,
                               double g2, std::size_t begin, std::size_t end) {
  std::uint64_t count = 0;
  std::size_t i = begin;
  for (; i + V <= end; i += V) {
    vd x1(v1 + i, stdx::element_aligned);
    vd x2(v2 + i, stdx::element_aligned);
    const auto m = (stdx::abs(x1 - vd(c1)) < vd(g1)) && (stdx::abs(x2 - vd(c2)) < vd(g2));
    count += stdx::popcount(m);
  }
  for (; i < end; ++i)
    count += (std::fabs(v1[i] - c1) < g1) & (std::fabs(v2[i] - c2) < g2);
  return count;
}

void accumulate_powers(const double* wre, const double* wim, std::size_t n, std::size_t k,
                       double* sre, double* sim) {
  // lane-split accumulators: S[j] gathered across V independent power chains,
  // horizontally reduced once at the end
  std::vector<double> accr((k + 1) * V, 0.0), acci((k + 1) * V, 0.0);
  std::size_t i = 0;
  for (; i + V <= n; i += V) {
    const vd wr(wre + i, stdx::element_aligned);
    const vd wi(wim + i, stdx::element_aligned);
    vd pr = wr, pi = wi;
    for (std::size_t j = 1; j <= k; ++j) {
      vd ar(&accr[j * V], stdx::element_aligned);
      vd ai(&acci[j * V], stdx::element_aligned);
      ar += pr;
      ai += pi;
      ar.copy_to(&accr[j * V], stdx::element_aligned);
      ai.copy_to(&acci[j * V], stdx::element_aligned);
      const vd t = pr * wr - pi * wi;
      pi = pr * wi + pi * wr;
      pr = t;
    }
  }
  for (std::size_t j = 1; j <= k; ++j) {
    double r = 0.0, im = 0.0;
    for (std::size_t lane = 0; lane < V; ++lane) {
      r += accr[j * V + lane];
      im += acci[j * V + lane];
    }
    sre[j] += r;
    sim[j] += im;
  }
  for (; i < n; ++i) {
    double pre = wre[i], pim = wim[i];
    for (std::size_t j = 1; j <= k; ++j) {
      sre[j] += pre;
      sim[j] += pim;
      const double t = pre * wre[i] - pim * wim[i];
      pim = pre * wim[i] + pim * wre[i];
      pre = t;
    }
  }
}

const Kernels table = {&count_near_sup,   &count_near_euclid, &count_window_lt,
                       &count_window2_lt, &accumulate_powers,
#if defined(__x86_64__)
                       "avx2"
#else
                       "neon"
#endif
};

}  // namespace

const Kernels* simd_kernels_impl() { return &table; }

#else

const Kernels* simd_kernels_impl() { return nullptr; }

#endif

}  // namespace ppclab
