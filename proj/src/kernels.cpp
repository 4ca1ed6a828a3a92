#include "kronlab/kernels.hpp"

#include <cstdlib>
#include <string_view>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace kronlab::kernels {

std::string_view isa_name(Isa isa) {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "?";
}

// Reference. Spelled out component-wise so the vector variants can mirror the
// exact operation sequence: re = ar*xr - ai*xi, im = ar*xi + ai*xr.
void caxpy_scalar(Complex64 a, const Complex64* x, Complex64* y, std::size_t n) {
    const double ar = a.real(), ai = a.imag();
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    for (std::size_t k = 0; k < n; ++k) {
        double xr = xp[2 * k], xi = xp[2 * k + 1];
        double pr = ar * xr;
        double pi = ar * xi;
        double qr = ai * xi;
        double qi = ai * xr;
        yp[2 * k] += pr - qr;
        yp[2 * k + 1] += pi + qi;
    }
}

#if defined(__x86_64__) || defined(_M_X64)
__attribute__((target("avx2"))) void caxpy_avx2(Complex64 a, const Complex64* x, Complex64* y, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    const __m256d vr = _mm256_set1_pd(a.real());
    const __m256d vi = _mm256_set1_pd(a.imag());
    std::size_t k = 0;
    // Two complex values per register: [xr0 xi0 xr1 xi1].
    for (; k + 2 <= n; k += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * k);
        __m256d xs = _mm256_permute_pd(xv, 0b0101); // [xi0 xr0 xi1 xr1]
        __m256d p = _mm256_mul_pd(vr, xv);          // [ar*xr, ar*xi, ...]
        __m256d q = _mm256_mul_pd(vi, xs);          // [ai*xi, ai*xr, ...]
        __m256d prod = _mm256_addsub_pd(p, q);      // [pr-qr, pi+qi, ...]
        __m256d yv = _mm256_loadu_pd(yp + 2 * k);
        _mm256_storeu_pd(yp + 2 * k, _mm256_add_pd(yv, prod));
    }
    if (k < n)
        caxpy_scalar(a, x + k, y + k, n - k);
}
#endif

#if defined(__aarch64__)
void caxpy_neon(Complex64 a, const Complex64* x, Complex64* y, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    const float64x2_t vr = vdupq_n_f64(a.real());
    const float64x2_t vi = vdupq_n_f64(a.imag());
    const float64x2_t sign = {-1.0, 1.0};
    for (std::size_t k = 0; k < n; ++k) {
        float64x2_t xv = vld1q_f64(xp + 2 * k);
        float64x2_t xs = vextq_f64(xv, xv, 1);
        float64x2_t p = vmulq_f64(vr, xv);
        float64x2_t q = vmulq_f64(vmulq_f64(vi, xs), sign);
        float64x2_t yv = vld1q_f64(yp + 2 * k);
        vst1q_f64(yp + 2 * k, vaddq_f64(yv, vaddq_f64(p, q)));
    }
}
#endif

bool isa_available(Isa isa) {
    switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Isa active_isa() {
    static const Isa chosen = [] {
        if (const char* env = std::getenv("KRONLAB_SIMD"); env && std::string_view(env) == "scalar")
            return Isa::scalar;
        if (isa_available(Isa::avx2))
            return Isa::avx2;
        if (isa_available(Isa::neon))
            return Isa::neon;
        return Isa::scalar;
    }();
    return chosen;
}

CaxpyFn caxpy_for(Isa isa) {
    if (!isa_available(isa))
        return &caxpy_scalar;
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::avx2: return &caxpy_avx2;
#endif
#if defined(__aarch64__)
    case Isa::neon: return &caxpy_neon;
#endif
    default: return &caxpy_scalar;
    }
}

CaxpyFn caxpy() {
    static const CaxpyFn fn = caxpy_for(active_isa());
    return fn;
}

} // namespace kronlab::kernels
