#include "tusforge/kernels/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace tusforge::kernels {

namespace {

Backend detect_backend() {
    if (const char* forced = std::getenv("TUSFORGE_SIMD")) {
        std::string_view f(forced);
        if (f == "scalar")
            return Backend::scalar;
#if defined(TUSFORGE_HAVE_AVX2)
        if (f == "avx2")
            return Backend::avx2;
#endif
#if defined(TUSFORGE_HAVE_NEON)
        if (f == "neon")
            return Backend::neon;
#endif
        // Unknown or unavailable name: fall through to autodetection.
    }
#if defined(TUSFORGE_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return Backend::avx2;
#endif
#if defined(TUSFORGE_HAVE_NEON)
    return Backend::neon; // baseline on aarch64
#endif
    return Backend::scalar;
}

using ReduceFn = float (*)(const float*, const float*, std::size_t);

struct Kernels {
    ReduceFn dot;
    ReduceFn l2_sq;
};

Kernels resolve(Backend b) {
    switch (b) {
#if defined(TUSFORGE_HAVE_AVX2)
    case Backend::avx2:
        return {&avx2::dot, &avx2::l2_sq};
#endif
#if defined(TUSFORGE_HAVE_NEON)
    case Backend::neon:
        return {&neon::dot, &neon::l2_sq};
#endif
    default:
        return {&scalar::dot, &scalar::l2_sq};
    }
}

const Kernels& active() {
    static const Kernels k = resolve(active_backend());
    return k;
}

} // namespace

Backend active_backend() {
    static const Backend b = detect_backend();
    return b;
}

std::string_view backend_name(Backend b) {
    switch (b) {
    case Backend::avx2:
        return "avx2";
    case Backend::neon:
        return "neon";
    default:
        return "scalar";
    }
}

float dot(const float* a, const float* b, std::size_t n) {
    return active().dot(a, b, n);
}

float l2_sq(const float* a, const float* b, std::size_t n) {
    return active().l2_sq(a, b, n);
}

} // namespace tusforge::kernels
