#pragma once
// Row kernels for elimination over F_p.
//
// Every dense operation in the library funnels through two primitives:
//   axpy:  dst[i] = (dst[i] + c * src[i]) mod p
//   scale: x[i]   = (c * x[i]) mod p
// A portable scalar reference implementation always exists; an AVX2 variant
// is compiled separately and selected at runtime when the CPU supports it.
// The AVX2 path uses 32-bit Barrett reduction and therefore only handles
// p < 2^16; larger moduli fall through to the scalar code.

#include <cstddef>
#include <cstdint>

#include "svar/field.hpp"

namespace svar::kernels {

enum class Isa { Scalar, Avx2 };

using AxpyFn = void (*)(Elem* dst, const Elem* src, Elem c, std::size_t n, std::uint32_t p);
using ScaleFn = void (*)(Elem* x, Elem c, std::size_t n, std::uint32_t p);

void axpy_scalar(Elem* dst, const Elem* src, Elem c, std::size_t n, std::uint32_t p);
void scale_scalar(Elem* x, Elem c, std::size_t n, std::uint32_t p);

#if defined(__x86_64__) || defined(_M_X64)
#define SVAR_HAVE_AVX2_KERNELS 1
void axpy_avx2(Elem* dst, const Elem* src, Elem c, std::size_t n, std::uint32_t p);
void scale_avx2(Elem* x, Elem c, std::size_t n, std::uint32_t p);
#else
#define SVAR_HAVE_AVX2_KERNELS 0
#endif

bool cpu_has_avx2();

struct Dispatch {
  Isa isa;
  AxpyFn axpy;
  ScaleFn scale;
};

/// Kernel table in use. Chosen once from CPUID; SVAR_FORCE_SCALAR=1 in the
/// environment pins the scalar path.
const Dispatch& active();

/// Table for a specific ISA (falls back to scalar when unavailable).
Dispatch table_for(Isa isa);

inline void axpy(Elem* dst, const Elem* src, Elem c, std::size_t n, std::uint32_t p) {
  if (c != 0) active().axpy(dst, src, c, n, p);
}
inline void scale(Elem* x, Elem c, std::size_t n, std::uint32_t p) {
  if (c != 1) active().scale(x, c, n, p);
}

const char* isa_name(Isa isa);

}  // namespace svar::kernels
