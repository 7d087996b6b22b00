#include "ppclab/kernels.hpp"

namespace ppclab {

const Kernels* simd_kernels_impl();  // kernels_simd.cpp

const Kernels* simd_kernels() {
#if defined(__x86_64__)
  static const Kernels* selected = [] {
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
      return simd_kernels_impl();
    return static_cast<const Kernels*>(nullptr);
  }();
  return selected;
#else
  static const Kernels* selected = simd_kernels_impl();
  return selected;
#endif
}

const Kernels& active_kernels() {
  const Kernels* s = simd_kernels();
  return s ? *s : scalar_kernels();
}

}  // namespace ppclab
