#pragma once

#include <cstddef>
#include <cstdint>

namespace ppclab {

// Data-parallel inner loops behind the counting and spectral paths.  Every
// entry has a scalar reference implementation and a SIMD variant selected at
// runtime; the two are equivalence-tested (exact for the integer counters).
//
// Torus distances here assume inputs already reduced to [0,1): the wrapped
// 1-d distance of a difference t in (-1,1) is min(|t|, 1-|t|).
struct Kernels {
  // #{ i in [begin,end) : max_l wrap(|cols[l][i] - q[l]|) <= thr }
  std::uint64_t (*count_near_sup)(const double* const* cols, std::size_t dim, const double* q,
                                  std::size_t begin, std::size_t end, double thr);
  // same with the 2-norm; compares squared distance against thr2
  std::uint64_t (*count_near_euclid)(const double* const* cols, std::size_t dim, const double* q,
                                     std::size_t begin, std::size_t end, double thr2);
  // #{ i in [begin,end) : |v[i] - c| < gamma }
  std::uint64_t (*count_window_lt)(const double* v, std::size_t begin, std::size_t end, double c,
                                   double gamma);
  // #{ i in [begin,end) : |v1[i]-c1| < g1  and  |v2[i]-c2| < g2 }
  std::uint64_t (*count_window2_lt)(const double* v1, double c1, double g1, const double* v2,
                                    double c2, double g2, std::size_t begin, std::size_t end);
  // S_j += sum_n w_n^j for j = 1..k, w_n unit complex numbers given as
  // (wre, wim); accumulates into sre[1..k], sim[1..k].
  void (*accumulate_powers)(const double* wre, const double* wim, std::size_t n, std::size_t k,
                            double* sre, double* sim);
  const char* name;
};

const Kernels& scalar_kernels();
// nullptr when the build or the running CPU lacks SIMD support.
const Kernels* simd_kernels();
// SIMD when available, otherwise scalar.
const Kernels& active_kernels();

}  // namespace ppclab
