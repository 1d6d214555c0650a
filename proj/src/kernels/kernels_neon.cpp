// NEON variants for aarch64. Same contract as the scalar reference.

#include "tusforge/kernels/kernels.hpp"

#if defined(TUSFORGE_HAVE_NEON)

#include <arm_neon.h>

namespace tusforge::kernels::neon {

float dot(const float* a, const float* b, std::size_t n) {
    float32x4_t acc = vdupq_n_f32(0.0f);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = vfmaq_f32(acc, vld1q_f32(a + i), vld1q_f32(b + i));
    float sum = vaddvq_f32(acc);
    for (; i < n; ++i)
        sum += a[i] * b[i];
    return sum;
}

float l2_sq(const float* a, const float* b, std::size_t n) {
    float32x4_t acc = vdupq_n_f32(0.0f);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float32x4_t d = vsubq_f32(vld1q_f32(a + i), vld1q_f32(b + i));
        acc = vfmaq_f32(acc, d, d);
    }
    float sum = vaddvq_f32(acc);
    for (; i < n; ++i) {
        float d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

} // namespace tusforge::kernels::neon

#endif // TUSFORGE_HAVE_NEON
