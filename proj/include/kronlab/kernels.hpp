#pragma once

// Complex-double inner loops of the Kronecker contraction, with a scalar
// reference and vector variants picked at runtime.
//
// Every variant performs the same IEEE operations in the same order (no FMA
// contraction), so results are bitwise identical to the scalar reference.

#include <complex>
#include <cstddef>
#include <string_view>

namespace kronlab::kernels {

using Complex64 = std::complex<double>;

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

/// y[k] += a * x[k] for k < n.
using CaxpyFn = void (*)(Complex64 a, const Complex64* x, Complex64* y, std::size_t n);

void caxpy_scalar(Complex64 a, const Complex64* x, Complex64* y, std::size_t n);
#if defined(__x86_64__) || defined(_M_X64)
void caxpy_avx2(Complex64 a, const Complex64* x, Complex64* y, std::size_t n);
#endif
#if defined(__aarch64__)
void caxpy_neon(Complex64 a, const Complex64* x, Complex64* y, std::size_t n);
#endif

/// Whether the running CPU supports `isa`.
bool isa_available(Isa isa);
/// Best ISA of the running CPU, unless KRONLAB_SIMD=scalar forces the
/// reference path.
Isa active_isa();
/// Kernel for `isa`; falls back to the scalar reference if unavailable.
CaxpyFn caxpy_for(Isa isa);
CaxpyFn caxpy();

} // namespace kronlab::kernels
