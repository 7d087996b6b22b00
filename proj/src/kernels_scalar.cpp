#include <cmath>
#include <vector>

#include "ppclab/kernels.hpp"

namespace ppclab {
namespace {

inline double wrap_dist(double a, double b) {
  const double t = std::fabs(a - b);
  return std::min(t, 1.0 - t);
}

std::uint64_t count_near_sup(const double* const* cols, std::size_t dim, const double* q,
                             std::size_t begin, std::size_t end, double thr) {
  std::uint64_t count = 0;
  for (std::size_t i = begin; i < end; ++i) {
    double m = 0.0;
    for (std::size_t l = 0; l < dim; ++l) m = std::max(m, wrap_dist(cols[l][i], q[l]));
    count += (m <= thr);
  }
  return count;
}

std::uint64_t count_near_euclid(const double* const* cols, std::size_t dim, const double* q,
                                std::size_t begin, std::size_t end, double thr2) {
  std::uint64_t count = 0;
  for (std::size_t i = begin; i < end; ++i) {
    double ss = 0.0;
    for (std::size_t l = 0; l < dim; ++l) {
      const double d = wrap_dist(cols[l][i], q[l]);
      ss += d * d;
    }
    count += (ss <= thr2);
  }
  return count;
}

std::uint64_t count_window_lt(const double* v, std::size_t begin, std::size_t end, double c,
                              double gamma) {
  std::uint64_t count = 0;
  for (std::size_t i = begin; i < end; ++i) count += (std::fabs(v[i] - c) < gamma);
  return count;
}

std::uint64_t count_window2_lt(const double* v1, double c1, double g1, const double* v2, double c2,
                               double g2, std::size_t begin, std::size_t end) {
  std::uint64_t count = 0;
  for (std::size_t i = begin; i < end; ++i)
    count += (std::fabs(v1[i] - c1) < g1) & (std::fabs(v2[i] - c2) < g2);
  return count;
}

void accumulate_powers(const double* wre, const double* wim, std::size_t n, std::size_t k,
                       double* sre, double* sim) {
  for (std::size_t i = 0; i < n; ++i) {
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

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {&count_near_sup,   &count_near_euclid, &count_window_lt,
                            &count_window2_lt, &accumulate_powers, "scalar"};
  return k;
}

}  // namespace ppclab
