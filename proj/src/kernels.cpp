#include "svar/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace svar::kernels {

void axpy_scalar(Elem* dst, const Elem* src, Elem c, std::size_t n, std::uint32_t p) {
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<Elem>((dst[i] + cc * src[i]) % p);
}

void scale_scalar(Elem* x, Elem c, std::size_t n, std::uint32_t p) {
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<Elem>(cc * x[i] % p);
}

bool cpu_has_avx2() {
#if SVAR_HAVE_AVX2_KERNELS && defined(__GNUC__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Dispatch table_for(Isa isa) {
#if SVAR_HAVE_AVX2_KERNELS
  if (isa == Isa::Avx2 && cpu_has_avx2()) return {Isa::Avx2, &axpy_avx2, &scale_avx2};
#endif
  (void)isa;
  return {Isa::Scalar, &axpy_scalar, &scale_scalar};
}

const Dispatch& active() {
  static const Dispatch d = [] {
    const char* force = std::getenv("SVAR_FORCE_SCALAR");
    if (force && std::strcmp(force, "1") == 0) return table_for(Isa::Scalar);
    return table_for(Isa::Avx2);
  }();
  return d;
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

}  // namespace svar::kernels
